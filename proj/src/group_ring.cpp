#include "pushcalc/group_ring.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "pushcalc/error.hpp"

namespace pushcalc {

RingElem::RingElem(const BigInt& constant) {
  if (constant != 0) terms_.emplace(FreeWord(), constant);
}

RingElem::RingElem(const FreeWord& word, const BigInt& coefficient) {
  if (coefficient != 0) terms_.emplace(word, coefficient);
}

void RingElem::add_term(const FreeWord& word, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem& RingElem::operator+=(const RingElem& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
  RingElem out = a;
  out += b;
  return out;
}

RingElem ring_neg(const RingElem& a) { return ring_scale(-1, a); }

RingElem ring_scale(const BigInt& c, const RingElem& a) {
  RingElem out;
  if (c == 0) return out;
  for (const auto& [w, x] : a.terms()) out.add_term(w, c * x);
  return out;
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  RingElem out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) out.add_term(concat(u, v), x * y);
  }
  return out;
}

RingElem translate(const FreeWord& u, const RingElem& a) {
  RingElem out;
  for (const auto& [w, c] : a.terms()) out.add_term(concat(u, w), c);
  return out;
}

RingElem translate_right(const RingElem& a, const FreeWord& u) {
  RingElem out;
  for (const auto& [w, c] : a.terms()) out.add_term(concat(w, u), c);
  return out;
}

RingElem ring_endo_apply(const FreeEndo& phi, const RingElem& a) {
  RingElem out;
  for (const auto& [w, c] : a.terms()) out.add_term(endo_apply(phi, w), c);
  return out;
}

BigInt coefficient(const RingElem& a, const FreeWord& u) {
  auto it = a.terms().find(u);
  return it == a.terms().end() ? BigInt(0) : it->second;
}

BigInt augment(const RingElem& a) {
  BigInt sum = 0;
  for (const auto& [w, c] : a.terms()) sum += c;
  return sum;
}

std::size_t max_word_length(const RingElem& a) {
  std::size_t m = 0;
  for (const auto& [w, c] : a.terms()) m = std::max(m, w.size());
  return m;
}

namespace {

// Renders one signed term without a leading '+'.
std::string format_term(const FreeWord& w, const BigInt& c) {
  BigInt mag = abs(c);
  std::string out = c < 0 ? "-" : "";
  if (w.is_identity()) return out + mag.str();
  if (mag != 1) out += mag.str();
  return out + format_word_compact(w);
}

// Joins signed pieces as "x + y - z".
void append_signed(std::string& out, const std::string& piece) {
  if (out.empty()) {
    out = piece;
  } else if (!piece.empty() && piece[0] == '-') {
    out += " - " + piece.substr(1);
  } else {
    out += " + " + piece;
  }
}

}  // namespace

std::string format_ring(const RingElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.terms()) append_signed(out, format_term(w, c));
  return out;
}

std::strong_ordering operator<=>(const SphereLabel& a, const SphereLabel& b) {
  auto key = [](const SphereLabel& l) {
    if (l.kind == SphereLabel::Kind::P) return std::pair{1, l.index};
    return l.index == 0 ? std::pair{0, 0} : std::pair{2, l.index};
  };
  return key(a) <=> key(b);
}

std::string format_label(const SphereLabel& label) {
  return (label.kind == SphereLabel::Kind::Tau ? "t" : "p") + std::to_string(label.index);
}

SphereLabel parse_label(std::string_view text) {
  if (text.size() < 2 || (text[0] != 't' && text[0] != 'p')) {
    throw ParseError("sphere label must look like t<i> or p<i>", 0);
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError("bad sphere label index", 1);
  if (text[0] == 'p') {
    if (index < 1) throw ParseError("puncture labels start at p1", 1);
    return SphereLabel::p(index);
  }
  if (index < 0) throw ParseError("negative cell index", 1);
  return SphereLabel::tau(index);
}

ModuleVec ModuleVec::unit(const SphereLabel& label, const RingElem& coefficient) {
  ModuleVec v;
  v.add(label, coefficient);
  return v;
}

RingElem ModuleVec::at(const SphereLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? RingElem() : it->second;
}

void ModuleVec::add(const SphereLabel& label, const RingElem& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(label, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& other) {
  for (const auto& [l, r] : other.entries_) add(l, r);
  return *this;
}

ModuleVec module_add(const ModuleVec& a, const ModuleVec& b) {
  ModuleVec out = a;
  out += b;
  return out;
}

ModuleVec module_scale(const BigInt& c, const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [l, r] : v.entries()) out.add(l, ring_scale(c, r));
  return out;
}

ModuleVec module_translate(const FreeWord& u, const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [l, r] : v.entries()) out.add(l, translate(u, r));
  return out;
}

ModuleVec module_translate_right(const ModuleVec& v, const FreeWord& u) {
  ModuleVec out;
  for (const auto& [l, r] : v.entries()) out.add(l, translate_right(r, u));
  return out;
}

ModuleVec module_endo_apply(const FreeEndo& phi, const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [l, r] : v.entries()) out.add(l, ring_endo_apply(phi, r));
  return out;
}

std::string format_module(const ModuleVec& v) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<SphereLabel, const RingElem*>> order;
  for (const auto& [l, r] : v.entries()) order.emplace_back(l, &r);
  std::stable_partition(order.begin(), order.end(), [](const auto& e) {
    return e.first.kind == SphereLabel::Kind::Tau && e.first.index > 0;
  });
  std::string out;
  for (const auto& [label, ring] : order) {
    std::string name = format_label(label);
    std::string piece;
    if (ring->size() == 1) {
      const auto& [w, c] = *ring->terms().begin();
      if (w.is_identity()) {
        piece = c == 1 ? name : c == -1 ? "-" + name : c.str() + "·" + name;
      } else {
        piece = format_term(w, c) + "·" + name;
      }
    } else {
      piece = "(" + format_ring(*ring) + ")·" + name;
    }
    append_signed(out, piece);
  }
  return out;
}

}  // namespace pushcalc
