#include "pushcalc/point_push.hpp"

#include <cctype>

#include "pushcalc/error.hpp"
#include "pushcalc/random.hpp"

namespace pushcalc {

ManifoldModel::ManifoldModel(int g, int d, std::vector<int> character, std::vector<std::vector<Crossing>> crossings,
                             int cells, bool low_handle_dim)
    : g_(g),
      d_(d),
      character_(std::move(character)),
      crossings_(std::move(crossings)),
      cells_(cells),
      low_handle_dim_(low_handle_dim) {
  if (g_ < 0) throw InvalidInput("rank g must be >= 0");
  if (d_ < 3) throw InvalidInput("manifold dimension requires d >= 3, got d = " + std::to_string(d_));
  if (cells_ < 0) throw InvalidInput("cell count must be >= 0");
  if (static_cast<int>(character_.size()) != g_) throw SizeMismatch("orientation character needs g entries");
  for (int s : character_) {
    if (s != 1 && s != -1) throw InvalidInput("orientation character values must be +1 or -1");
  }
  if (static_cast<int>(crossings_.size()) != g_) throw SizeMismatch("crossing data needs one list per generator");
  for (const auto& list : crossings_) {
    for (const auto& c : list) {
      if (c.cell < 1 || c.cell > cells_) throw InvalidInput("crossing refers to a cell outside 1..cells");
      if (c.sign != 1 && c.sign != -1) throw InvalidInput("crossing sign must be +1 or -1");
      if (c.prefix.max_gen() > g_) throw InvalidInput("crossing prefix exceeds rank");
    }
  }
}

ManifoldModel ManifoldModel::standard(int g, int d) {
  std::vector<std::vector<Crossing>> crossings;
  for (int i = 1; i <= g; ++i) crossings.push_back({Crossing{i, 1, FreeWord()}});
  return ManifoldModel(g, d, std::vector<int>(static_cast<std::size_t>(g), 1), std::move(crossings), g);
}

ManifoldModel ManifoldModel::with_low_handle_dim(bool flag) const {
  ManifoldModel m = *this;
  m.low_handle_dim_ = flag;
  return m;
}

bool ManifoldModel::is_standard() const {
  ManifoldModel ref = standard(g_, d_);
  return character_ == ref.character_ && crossings_ == ref.crossings_ && cells_ == ref.cells_;
}

bool ManifoldModel::is_orientable() const {
  for (int s : character_) {
    if (s != 1) return false;
  }
  return true;
}

PuncturedSignature::PuncturedSignature(ManifoldModel m, int punctures) : model(std::move(m)), k(punctures) {
  if (k < 0) throw InvalidInput("puncture count must be >= 0");
}

WedgeSignature PuncturedSignature::wedge() const {
  std::vector<SphereLabel> labels;
  for (int i = 1; i <= model.cells(); ++i) labels.push_back(SphereLabel::tau(i));
  for (int i = 1; i <= k; ++i) labels.push_back(SphereLabel::p(i));
  return WedgeSignature(model.g(), std::move(labels), model.d());
}

BraidElement::BraidElement(std::vector<FreeWord> slot_words, Permutation sigma)
    : words(std::move(slot_words)), perm(std::move(sigma)) {
  if (static_cast<int>(words.size()) != perm.size()) {
    throw SizeMismatch("braid has " + std::to_string(words.size()) + " words but a permutation of degree " +
                       std::to_string(perm.size()));
  }
}

BraidElement BraidElement::identity(int k) {
  return BraidElement(std::vector<FreeWord>(static_cast<std::size_t>(k)), Permutation::identity(k));
}

BraidElement BraidElement::loop(int k, int slot, const FreeWord& word) {
  if (slot < 1 || slot > k) throw SlotOutOfRange("slot " + std::to_string(slot) + " outside 1.." + std::to_string(k));
  BraidElement b = identity(k);
  b.words[static_cast<std::size_t>(slot - 1)] = word;
  return b;
}

bool BraidElement::is_identity() const {
  for (const auto& w : words) {
    if (!w.is_identity()) return false;
  }
  return perm.is_identity();
}

BraidElement braid_mul(const BraidElement& a, const BraidElement& b) {
  if (a.k() != b.k()) throw SizeMismatch("braid_mul: different puncture counts");
  Permutation sigma_inv = a.perm.inverse();
  std::vector<FreeWord> words;
  words.reserve(a.words.size());
  for (int i = 0; i < a.k(); ++i) {
    words.push_back(concat(a.words[static_cast<std::size_t>(i)], b.words[static_cast<std::size_t>(sigma_inv(i))]));
  }
  return BraidElement(std::move(words), a.perm * b.perm);
}

BraidElement braid_inverse(const BraidElement& a) {
  // (b; σ⁻¹) with b_{σ⁻¹(i)} = a_i⁻¹.
  std::vector<FreeWord> words(a.words.size());
  for (int i = 0; i < a.k(); ++i) words[static_cast<std::size_t>(a.perm.inverse()(i))] = invert(a.words[static_cast<std::size_t>(i)]);
  return BraidElement(std::move(words), a.perm.inverse());
}

std::string format_braid(const BraidElement& b) {
  std::string out = "[";
  for (int i = 0; i < b.k(); ++i) out += (i ? " | " : "") + format_word(b.words[static_cast<std::size_t>(i)]);
  return out + (b.k() ? " ; " : "; ") + format_cycles(b.perm) + "]";
}

BraidElement parse_braid(std::string_view text, int rank) {
  std::size_t open = text.find_first_not_of(" \t\n\r");
  if (open == std::string_view::npos || text[open] != '[') throw ParseError("braid must start with '['", open == std::string_view::npos ? 0 : open);
  std::size_t close = text.find_last_not_of(" \t\n\r");
  if (text[close] != ']') throw ParseError("braid must end with ']'", close);
  std::size_t semi = text.find(';', open);
  if (semi == std::string_view::npos || semi > close) throw ParseError("braid needs ';' before the permutation", close);
  std::string_view slots = text.substr(open + 1, semi - open - 1);
  std::vector<FreeWord> words;
  if (slots.find_first_not_of(" \t\n\r") != std::string_view::npos || slots.find('|') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t bar = slots.find('|', start);
      std::string_view piece = slots.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      try {
        words.push_back(parse_word(piece, rank));
      } catch (const ParseError& e) {
        throw ParseError("bad slot word", open + 1 + start + e.position());
      }
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
  }
  int k = static_cast<int>(words.size());
  Permutation perm;
  try {
    perm = parse_cycles(text.substr(semi + 1, close - semi - 1), k);
  } catch (const ParseError& e) {
    throw ParseError("bad permutation", semi + 1 + e.position());
  }
  return BraidElement(std::move(words), std::move(perm));
}

namespace {

void check_slot(const PuncturedSignature& sig, int slot) {
  if (slot < 1 || slot > sig.k) {
    throw SlotOutOfRange("slot " + std::to_string(slot) + " outside 1.." + std::to_string(sig.k));
  }
}

void check_word(const PuncturedSignature& sig, const FreeWord& w) {
  if (w.max_gen() > sig.model.g()) {
    throw SignatureMismatch("word " + format_word(w) + " exceeds rank g = " + std::to_string(sig.model.g()));
  }
}

}  // namespace

SelfMapClass push_letter(const PuncturedSignature& sig, Letter letter, int slot) {
  check_slot(sig, slot);
  if (letter.gen() < 1 || letter.gen() > sig.model.g()) throw SignatureMismatch("letter exceeds rank");
  const WedgeSignature wedge = sig.wedge();
  const SphereLabel p = SphereLabel::p(slot);
  const FreeWord l = FreeWord::generator(letter.gen(), letter.sign());
  const int chi = char_sign(sig.model.character(), l);

  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& label : wedge.labels()) spheres.emplace(label, ModuleVec::unit(label));
  spheres[p] = ModuleVec::unit(p, RingElem(l, chi));
  for (const auto& crossing : sig.model.crossings(letter.gen())) {
    ModuleVec& cell = spheres[SphereLabel::tau(crossing.cell)];
    if (letter.sign() > 0) {
      cell.add(p, RingElem(crossing.prefix, crossing.sign));
    } else {
      cell.add(p, RingElem(concat(l, crossing.prefix), -crossing.sign * chi));
    }
  }
  return SelfMapClass(wedge, FreeEndo::identity(sig.model.g()), std::move(spheres));
}

SelfMapClass push_sym(const PuncturedSignature& sig, const Permutation& sigma) {
  if (sigma.size() != sig.k) throw SizeMismatch("permutation degree differs from puncture count");
  const WedgeSignature wedge = sig.wedge();
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& label : wedge.labels()) {
    SphereLabel target = label.kind == SphereLabel::Kind::P ? SphereLabel::p(sigma(label.index - 1) + 1) : label;
    spheres.emplace(label, ModuleVec::unit(target));
  }
  return SelfMapClass(wedge, FreeEndo::identity(sig.model.g()), std::move(spheres));
}

SelfMapClass push_word(const PuncturedSignature& sig, const FreeWord& w, int slot) {
  check_slot(sig, slot);
  check_word(sig, w);
  SelfMapClass result = identity(sig.wedge());
  for (Letter l : w.letters()) result = compose(result, push_letter(sig, l, slot));
  return result;
}

RingElem fox_derivative(const FreeWord& w, int gen) {
  RingElem out;
  for (const auto& occ : letter_profile(w, gen)) out.add_term(occ.prefix, occ.sign);
  return out;
}

SelfMapClass push_word_closed(const PuncturedSignature& sig, const FreeWord& w, int slot) {
  if (!sig.model.is_standard()) {
    throw ModelNotDefault("closed form is only available for the standard M^d_{g,1} model");
  }
  check_slot(sig, slot);
  check_word(sig, w);
  const WedgeSignature wedge = sig.wedge();
  const SphereLabel p = SphereLabel::p(slot);
  std::map<SphereLabel, ModuleVec> spheres;
  for (const auto& label : wedge.labels()) spheres.emplace(label, ModuleVec::unit(label));
  spheres[p] = ModuleVec::unit(p, RingElem(w));
  for (int i = 1; i <= sig.model.g(); ++i) spheres[SphereLabel::tau(i)].add(p, fox_derivative(w, i));
  return SelfMapClass(wedge, FreeEndo::identity(sig.model.g()), std::move(spheres));
}

SelfMapClass push_braid(const PuncturedSignature& sig, const BraidElement& gamma) {
  if (gamma.k() != sig.k) throw SizeMismatch("braid has " + std::to_string(gamma.k()) + " slots, signature has k = " + std::to_string(sig.k));
  SelfMapClass result = identity(sig.wedge());
  for (int i = 1; i <= sig.k; ++i) {
    const FreeWord& w = gamma.words[static_cast<std::size_t>(i - 1)];
    if (!w.is_identity()) result = compose(result, push_word(sig, w, i));
  }
  return compose(result, push_sym(sig, gamma.perm));
}

std::variant<BraidElement, NotInImage> recover_braid(const PuncturedSignature& sig, const SelfMapClass& h) {
  if (!sig.model.is_standard()) throw ModelNotDefault("recover_braid needs the standard M^d_{g,1} model");
  if (!(h.signature() == sig.wedge())) throw SignatureMismatch("class does not live on the punctured wedge");
  if (!h.circle_part().is_identity()) return NotInImage{"circle part is not the identity"};

  std::vector<FreeWord> words(static_cast<std::size_t>(sig.k));
  std::vector<int> images(static_cast<std::size_t>(sig.k), -1);
  std::vector<bool> hit(static_cast<std::size_t>(sig.k), false);
  for (int i = 1; i <= sig.k; ++i) {
    const ModuleVec& image = h.sphere_image(SphereLabel::p(i));
    std::string where = "image of p" + std::to_string(i);
    if (image.entries().size() != 1) return NotInImage{where + " is not supported on a single sphere"};
    const auto& [label, ring] = *image.entries().begin();
    if (label.kind != SphereLabel::Kind::P) return NotInImage{where + " lands on a cell sphere"};
    if (ring.size() != 1) return NotInImage{where + " has more than one term"};
    const auto& [u, c] = *ring.terms().begin();
    if (c != char_sign(sig.model.character(), u)) return NotInImage{where + " has coefficient " + c.str() + ", not a unit of the right sign"};
    int j = label.index - 1;
    if (hit[static_cast<std::size_t>(j)]) return NotInImage{"two punctures map to p" + std::to_string(j + 1)};
    hit[static_cast<std::size_t>(j)] = true;
    images[static_cast<std::size_t>(i - 1)] = j;
    words[static_cast<std::size_t>(j)] = u;
  }
  BraidElement candidate(std::move(words), Permutation(std::move(images)));
  if (!(push_braid(sig, candidate) == h)) return NotInImage{"cell images disagree with the push of the decoded braid"};
  return candidate;
}

KernelReport kernel_report(const PuncturedSignature& sig, std::size_t max_word_len, std::size_t max_braids,
                           std::uint64_t seed) {
  if (!sig.model.is_standard()) throw ModelNotDefault("kernel_report needs the standard M^d_{g,1} model");
  KernelReport report;
  const SelfMapClass id = identity(sig.wedge());
  auto visit = [&](const BraidElement& b) {
    ++report.checked;
    if (push_braid(sig, b) == id) {
      if (b.is_identity()) {
        report.identity_in_kernel = true;
      } else {
        report.nontrivial_kernel.push_back(b);
      }
    }
  };

  const std::vector<FreeWord> words = enumerate_words(sig.model.g(), max_word_len);
  const std::vector<Permutation> perms = all_permutations(sig.k);
  // Size of the search space, saturating once it exceeds max_braids.
  std::size_t total = perms.size();
  for (int i = 0; i < sig.k && total <= max_braids; ++i) total *= words.size();

  if (total <= max_braids) {
    report.exhaustive = true;
    std::vector<std::size_t> idx(static_cast<std::size_t>(sig.k), 0);
    while (true) {
      std::vector<FreeWord> slot_words;
      for (std::size_t i : idx) slot_words.push_back(words[i]);
      for (const auto& perm : perms) visit(BraidElement(slot_words, perm));
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == words.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    return report;
  }

  Sampler sampler(seed);
  visit(BraidElement::identity(sig.k));
  for (std::size_t n = 0; n < max_braids; ++n) {
    std::vector<FreeWord> slot_words;
    for (int i = 0; i < sig.k; ++i) slot_words.push_back(sampler.word(sig.model.g(), max_word_len));
    visit(BraidElement(std::move(slot_words), sampler.permutation(sig.k)));
  }
  return report;
}

}  // namespace pushcalc
