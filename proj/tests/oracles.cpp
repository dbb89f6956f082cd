#include "oracles.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

using namespace pushcalc;

RawWord reduce(const RawWord& w) {
  RawWord stack;
  for (int x : w) {
    if (!stack.empty() && stack.back() == -x) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

RawWord raw(const FreeWord& w) {
  RawWord out;
  for (Letter l : w.letters()) out.push_back(l.sign() * l.gen());
  return out;
}

NaiveRing naive(const RingElem& a) {
  NaiveRing out;
  for (const auto& [w, c] : a.terms()) out[raw(w)] += c.convert_to<long long>();
  return out;
}

NaiveRing naive_mul(const NaiveRing& a, const NaiveRing& b) {
  NaiveRing out;
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) {
      RawWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out[reduce(uv)] += c * d;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

int exponent(const FreeWord& w) {
  int e = 0;
  for (Letter l : w.letters()) e += l.sign();
  return e;
}

void add(std::map<int, long long>& m, int i, long long c) {
  if ((m[i] += c) == 0) m.erase(i);
}

}  // namespace

RankOneMap to_rank_one(const SelfMapClass& h) {
  if (h.signature().g() != 1 || h.signature().labels().size() != 2) throw std::invalid_argument("not a rank-one map");
  const SphereLabel p = h.signature().labels()[0];
  const SphereLabel t = h.signature().labels()[1];
  RankOneMap out;
  out.k = exponent(h.circle_part().images()[0]);
  auto split = [&](const ModuleVec& v, std::map<int, long long>& on_p, std::map<int, long long>& on_t) {
    for (const auto& [label, ring] : v.entries()) {
      for (const auto& [w, c] : ring.terms()) add(label == p ? on_p : on_t, exponent(w), c.convert_to<long long>());
    }
  };
  split(h.sphere_image(p), out.m, out.n);
  split(h.sphere_image(t), out.r, out.s);
  return out;
}

RankOneMap compose_rank_one(const RankOneMap& o, const RankOneMap& in) {
  RankOneMap out;
  out.k = o.k * in.k;
  auto get = [](const std::map<int, long long>& m, int i) {
    auto it = m.find(i);
    return it == m.end() ? 0LL : it->second;
  };
  std::set<int> is, js;
  for (const auto* m : {&o.m, &o.n, &o.r, &o.s}) {
    for (const auto& [i, c] : *m) is.insert(i);
  }
  for (const auto* m : {&in.m, &in.n, &in.r, &in.s}) {
    for (const auto& [j, c] : *m) js.insert(j);
  }
  for (int i : is) {
    for (int j : js) {
      const int e = i + j * o.k;
      add(out.m, e, get(o.m, i) * get(in.m, j) + get(o.r, i) * get(in.n, j));
      add(out.n, e, get(o.n, i) * get(in.m, j) + get(o.s, i) * get(in.n, j));
      add(out.r, e, get(o.m, i) * get(in.r, j) + get(o.r, i) * get(in.s, j));
      add(out.s, e, get(o.n, i) * get(in.r, j) + get(o.s, i) * get(in.s, j));
    }
  }
  return out;
}

using EntryMap = std::map<std::pair<BasisKey, BasisKey>, BigInt>;

EntryMap dense_product(const TruncatedMatrix& left, const TruncatedMatrix& right) {
  std::set<BasisKey> middle;
  for (const auto& key : right.row_keys()) middle.insert(key);
  std::set<BasisKey> rows;
  for (const auto& key : middle) {
    for (const auto& [row, value] : left.columns().at(key)) rows.insert(row);
  }
  EntryMap out;
  for (const auto& [col, column] : right.columns()) {
    for (const auto& row : rows) {
      BigInt sum = 0;
      for (const auto& mid : middle) sum += left.entry(row, mid) * right.entry(mid, col);
      if (sum != 0) out[{row, col}] = sum;
    }
  }
  return out;
}

EntryMap entries(const TruncatedMatrix& t) {
  EntryMap out;
  for (const auto& [col, column] : t.columns()) {
    for (const auto& [row, value] : column) {
      if (value != 0) out[{row, col}] = value;
    }
  }
  return out;
}

long long count_components(const TargetModel& target, int g, int k) {
  const auto& charge = target.charge();
  long long total = 0;
  for (std::size_t f = 0; f < target.f_classes().size(); ++f) {
    std::vector<std::vector<int>> gens;  // generator permutations and inverses, as image tables
    for (const auto& w : target.f_classes()[f]) {
      if (static_cast<int>(target.f_classes()[f].size()) != g) throw std::invalid_argument("f-class size");
      std::vector<int> image(static_cast<std::size_t>(target.class_count()));
      for (int x = 0; x < target.class_count(); ++x) {
        int y = x;
        for (Letter l : w.letters()) {
          const auto& p = target.action()[static_cast<std::size_t>(l.gen() - 1)];
          y = l.sign() > 0 ? p(y) : p.inverse()(y);
        }
        image[static_cast<std::size_t>(x)] = y;
      }
      std::vector<int> inverse(image.size());
      for (std::size_t x = 0; x < image.size(); ++x) inverse[static_cast<std::size_t>(image[x])] = static_cast<int>(x);
      gens.push_back(image);
      gens.push_back(inverse);
    }
    std::set<std::vector<int>> seen;
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    // Enumerate all tuples of charge positions.
    std::vector<std::vector<int>> all;
    std::function<void(int)> fill = [&](int slot) {
      if (slot == k) {
        all.push_back(tuple);
        return;
      }
      for (int c : charge) {
        tuple[static_cast<std::size_t>(slot)] = c;
        fill(slot + 1);
      }
    };
    fill(0);
    for (const auto& start : all) {
      if (seen.count(start)) continue;
      ++total;
      std::deque<std::vector<int>> queue{start};
      seen.insert(start);
      while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        std::vector<std::vector<int>> next;
        for (int i = 0; i < k; ++i) {
          for (const auto& gen : gens) {
            auto t = s;
            t[static_cast<std::size_t>(i)] = gen[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            next.push_back(t);
          }
          for (int j = i + 1; j < k; ++j) {
            auto t = s;
            std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
            next.push_back(t);
          }
        }
        for (auto& t : next) {
          if (seen.insert(t).second) queue.push_back(std::move(t));
        }
      }
    }
  }
  return total;
}

}  // namespace oracle
