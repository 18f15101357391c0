#include "core/morphic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "core/error.hpp"

namespace ans {

namespace {

constexpr std::string_view kNamePool =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Morphism::Morphism(std::vector<std::string> names, std::vector<std::vector<int>> images)
    : names_(std::move(names)), images_(std::move(images)) {
  if (names_.size() != images_.size()) {
    throw Error(ErrorKind::InvalidArgument, "every letter needs exactly one image");
  }
  for (const auto& img : images_) {
    for (int x : img) {
      if (x < 0 || static_cast<std::size_t>(x) >= names_.size()) {
        throw Error(ErrorKind::InvalidArgument, "image letter outside the alphabet");
      }
    }
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::string> raw;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0, begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip(text.substr(begin, end - begin));
    begin = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line_no, "expected 'letter -> image'");
    std::string name(strip(line.substr(0, arrow)));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      throw ParseError(line_no, "bad letter name '" + name + "'");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError(line_no, "letter '" + name + "' defined twice");
    }
    names.push_back(name);
    raw.emplace_back(strip(line.substr(arrow + 2)));
    lines.push_back(line_no);
  }
  std::vector<std::vector<int>> images;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<std::string> parts;
    if (raw[i] == "eps") {
      // empty image
    } else if (raw[i].find(' ') != std::string::npos) {
      std::istringstream in(raw[i]);
      std::string t;
      while (in >> t) parts.push_back(t);
    } else {
      for (char c : raw[i]) parts.emplace_back(1, c);
    }
    if (raw[i].empty()) throw ParseError(lines[i], "empty image (write eps)");
    std::vector<int> img;
    for (const auto& p : parts) {
      auto it = std::find(names.begin(), names.end(), p);
      if (it == names.end()) throw ParseError(lines[i], "image letter '" + p + "' has no image");
      img.push_back(static_cast<int>(it - names.begin()));
    }
    images.push_back(std::move(img));
  }
  if (names.empty()) throw ParseError(line_no, "empty morphism");
  return Morphism(std::move(names), std::move(images));
}

std::string Morphism::to_text() const {
  const bool short_names =
      std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out += names_[i] + " -> ";
    if (images_[i].empty()) out += "eps";
    for (std::size_t j = 0; j < images_[i].size(); ++j) {
      if (j && !short_names) out += ' ';
      out += names_[static_cast<std::size_t>(images_[i][j])];
    }
    out += '\n';
  }
  return out;
}

std::optional<int> Morphism::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool Morphism::is_prolongable(int a) const {
  const auto& img = image(a);
  return !img.empty() && img.front() == a;
}

std::vector<bool> Morphism::mortal_letters() const {
  std::vector<bool> mortal(size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < size(); ++x) {
      if (mortal[x]) continue;
      const auto& img = images_[x];
      if (std::all_of(img.begin(), img.end(), [&](int y) { return mortal[static_cast<std::size_t>(y)]; })) {
        mortal[x] = true;
        changed = true;
      }
    }
  }
  return mortal;
}

bool Morphism::has_infinite_fixed_point(int a) const {
  if (!is_prolongable(a)) return false;
  auto mortal = mortal_letters();
  const auto& img = image(a);
  return std::any_of(img.begin() + 1, img.end(), [&](int y) { return !mortal[static_cast<std::size_t>(y)]; });
}

std::vector<int> Morphism::apply(const std::vector<int>& word) const {
  std::vector<int> out;
  for (int x : word) {
    const auto& img = image(x);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::vector<BigInt> Morphism::step(const std::vector<BigInt>& occ) const {
  std::vector<BigInt> out(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    if (occ[x] == 0) continue;
    for (int y : images_[x]) out[static_cast<std::size_t>(y)] += occ[x];
  }
  return out;
}

MorphicWord::MorphicWord(Morphism m, int seed, std::optional<Coding> coding)
    : morphism_(std::move(m)), coding_(std::move(coding)) {
  if (seed < 0 || static_cast<std::size_t>(seed) >= morphism_.size()) {
    throw Error(ErrorKind::InvalidArgument, "seed letter outside the alphabet");
  }
  if (!morphism_.is_prolongable(seed)) {
    throw Error(ErrorKind::InvalidArgument, "morphism is not prolongable on the seed");
  }
  if (!morphism_.has_infinite_fixed_point(seed)) {
    throw Error(ErrorKind::FiniteFixedPoint, "the fixed point is finite");
  }
  if (coding_ && coding_->image.size() != morphism_.size()) {
    throw Error(ErrorKind::InvalidArgument, "coding must cover every letter");
  }
  letters_ = morphism_.image(seed);
}

void MorphicWord::grow(std::size_t n) const {
  // x = μ(x): the image of x[i] continues the word once x[0..i) is expanded.
  while (letters_.size() < n) {
    const auto& img = morphism_.image(letters_[expanded_++]);
    letters_.insert(letters_.end(), img.begin(), img.end());
  }
}

void MorphicWord::grow_coded(std::size_t n) const {
  std::size_t idle = 0;
  while (coded_.size() < n) {
    grow(coded_upto_ + 1);
    int c = coding_->image[static_cast<std::size_t>(letters_[coded_upto_++])];
    if (c >= 0) {
      coded_.push_back(c);
      idle = 0;
    } else if (++idle > (std::size_t{1} << 26)) {
      throw Error(ErrorKind::FiniteFixedPoint, "coded word appears to be finite");
    }
  }
}

std::vector<int> MorphicWord::prefix(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  grow(n);
  return {letters_.begin(), letters_.begin() + static_cast<long>(n)};
}

std::vector<int> MorphicWord::coded_prefix(std::size_t n) const {
  if (!coding_) throw Error(ErrorKind::InvalidArgument, "the morphic word has no coding");
  std::lock_guard<std::mutex> lock(mutex_);
  grow_coded(n);
  return {coded_.begin(), coded_.begin() + static_cast<long>(n)};
}

AssociatedMorphism associated_morphism(const Dfa& d) {
  const std::size_t n = d.num_states();
  if (n == 0) throw Error(ErrorKind::EmptyLanguage, "automaton has no states");
  std::vector<std::string> names;
  for (std::size_t q = 0; q < n; ++q) {
    names.push_back(n <= kNamePool.size() ? std::string(1, kNamePool[q]) : "q" + std::to_string(q));
  }
  names.push_back(n <= kNamePool.size() ? "@" : "alpha");
  std::vector<std::vector<int>> images(n + 1);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      if (t != kNoState) images[q].push_back(t);
    }
  }
  const int alpha = static_cast<int>(n);
  images[n].push_back(alpha);
  const auto& start = images[static_cast<std::size_t>(d.initial())];
  images[n].insert(images[n].end(), start.begin(), start.end());
  return {Morphism(std::move(names), std::move(images)), alpha};
}

MorphicPipeline build_pipeline(const RecognizableSet& x) {
  MorphicPipeline p;
  p.language_dfa = x.system().dfa();
  p.set_dfa = complete(minimize(x.rep_dfa()));
  p.automaton = product(p.language_dfa, p.set_dfa, both_final);
  p.mu = associated_morphism(p.automaton);
  const auto& origins = p.automaton.origins();
  p.g.image.resize(p.mu.morphism.size());
  for (std::size_t s = 0; s < origins.size(); ++s) {
    const bool pf = p.language_dfa.is_final(origins[s].first);
    const bool qf = p.set_dfa.is_final(origins[s].second);
    p.g.image[s] = pf ? (qf ? 1 : 0) : -1;
  }
  p.g.image[static_cast<std::size_t>(p.mu.alpha)] =
      p.g.image[static_cast<std::size_t>(p.automaton.initial())];
  return p;
}

std::vector<std::vector<BigInt>> MorphicPipeline::occurrences(std::size_t n) const {
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> v(mu.morphism.size(), 0);
  v[static_cast<std::size_t>(mu.alpha)] = 1;
  out.push_back(v);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(mu.morphism.step(out.back()));
  return out;
}

MorphicPipeline::Counts MorphicPipeline::counts(std::size_t n) const {
  Counts c;
  for (const auto& occ : occurrences(n)) {
    BigInt len = 0, coded = 0, ones = 0;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      len += occ[i];
      if (g.image[i] >= 0) coded += occ[i];
      if (g.image[i] == 1) ones += occ[i];
    }
    c.length.push_back(len);
    c.coded_length.push_back(coded);
    c.F.push_back(ones);
  }
  return c;
}

CanonicalAutomaton canonical_automaton(const Morphism& m, int alpha) {
  if (!m.is_prolongable(alpha)) {
    throw Error(ErrorKind::InvalidArgument, "morphism is not prolongable on the seed");
  }
  std::size_t width = m.image(alpha).size() - 1;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (static_cast<int>(x) != alpha) width = std::max(width, m.image(static_cast<int>(x)).size());
  }
  if (width + 1 > kNamePool.size()) throw Error(ErrorKind::InvalidArgument, "images too long");
  OrderedAlphabet sigma(kNamePool.substr(0, width + 1));
  const std::size_t n = m.size();
  CanonicalAutomaton out;
  out.b = Dfa(sigma, n, alpha);
  out.k = Dfa(sigma, n + 1, static_cast<State>(n));
  for (std::size_t x = 0; x < n; ++x) {
    out.b.set_final(static_cast<State>(x));
    out.k.set_final(static_cast<State>(x));
    const auto& img = m.image(static_cast<int>(x));
    // α reads its own image from position 0 (the loop); others shift by one.
    const std::size_t offset = static_cast<int>(x) == alpha ? 0 : 1;
    for (std::size_t i = 0; i < img.size(); ++i) {
      out.b.set_transition(static_cast<State>(x), i + offset, img[i]);
      out.k.set_transition(static_cast<State>(x), i + offset, img[i]);
    }
  }
  out.k.set_final(static_cast<State>(n));
  const auto& img = m.image(alpha);
  for (std::size_t i = 1; i < img.size(); ++i) out.k.set_transition(static_cast<State>(n), i, img[i]);
  out.k = trim(out.k);
  return out;
}

LemmaReport verify_lemma_L(const RecognizableSet& x, std::size_t n_max) {
  LemmaReport r;
  MorphicPipeline p = build_pipeline(x);
  auto c = p.counts(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const BigInt& vl = x.system().counts().v(static_cast<long>(n));
    const BigInt& vx = x.rep_counts().v(static_cast<long>(n));
    if (c.coded_length[n] != vl || c.F[n] != vx) {
      r.ok = false;
      r.first_bad = static_cast<long>(n);
      r.detail = "n=" + std::to_string(n) + ": |g(mu^n(alpha))|=" + to_string(c.coded_length[n]) +
                 " v_L=" + to_string(vl) + " F=" + to_string(c.F[n]) + " v_X=" + to_string(vx);
      return r;
    }
  }
  r.detail = "n<=" + std::to_string(n_max);
  return r;
}

LemmaReport verify_lemma_equiv(const RecognizableSet& x, const std::vector<BigInt>& samples) {
  LemmaReport r;
  if (samples.empty()) return r;
  const BigInt top = *std::max_element(samples.begin(), samples.end());
  MorphicPipeline p = build_pipeline(x);
  std::size_t k_max = 4;
  MorphicPipeline::Counts c = p.counts(k_max);
  while (c.F.back() <= top) {
    if (k_max > 4096) throw Error(ErrorKind::OutOfRange, "F does not exceed the sampled indices");
    k_max *= 2;
    c = p.counts(k_max);
  }
  for (const BigInt& n : samples) {
    const BigInt t = x.t(n);
    for (std::size_t k = 0; k < k_max; ++k) {
      const bool left = c.coded_length[k] <= t && t < c.coded_length[k + 1];
      const bool right = c.F[k] <= n && n < c.F[k + 1];
      if (left != right) {
        r.ok = false;
        r.first_bad = static_cast<long>(n.get_si());
        r.detail = "n=" + to_string(n) + " k=" + std::to_string(k);
        return r;
      }
    }
  }
  r.detail = std::to_string(samples.size()) + " samples";
  return r;
}

RecognizableSet set_from_dfao(const NumerationSystem& s, const Dfao& a) {
  const Dfa& src = a.automaton;
  if (!(src.alphabet() == s.alphabet())) {
    throw Error(ErrorKind::InvalidArgument, "DFAO alphabet differs from the numeration alphabet");
  }
  if (!src.is_complete()) throw Error(ErrorKind::InvalidArgument, "DFAO must be complete");
  Dfa marked = src;
  for (std::size_t q = 0; q < src.num_states(); ++q) marked.set_final(static_cast<State>(q), a.output[q] == 1);
  return RecognizableSet::intersecting(s, marked);
}

Dfao dfao_from_set(const RecognizableSet& x) {
  Dfa p = product(complete(x.system().dfa()), complete(x.rep_dfa()), both_final);
  std::vector<std::uint8_t> out(p.num_states());
  for (std::size_t q = 0; q < p.num_states(); ++q) out[q] = p.is_final(static_cast<State>(q)) ? 1 : 0;
  return Dfao::from_partial(p, std::move(out));
}

}  // namespace ans
