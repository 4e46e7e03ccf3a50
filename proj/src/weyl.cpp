#include "trilocal/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "trilocal/cartan.hpp"
#include "trilocal/errors.hpp"

namespace trilocal {

EmbeddingShape::EmbeddingShape(int n_, int sigma_) : n(n_), sigma(sigma_) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (sigma < 1) throw PreconditionError("sigma must be >= 1");
  if (n > 16) throw PreconditionError("n > 16 is not supported");
}

std::string EmbeddingShape::to_string() const {
  return "(n=" + std::to_string(n) + ", sigma=" + std::to_string(sigma) + ")";
}

void require_same_shape(const EmbeddingShape& a, const EmbeddingShape& b, const char* what) {
  if (a != b)
    throw ShapeMismatch(std::string(what) + ": shape " + a.to_string() + " vs " + b.to_string());
}

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw PreconditionError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::longest(int n) {
  std::vector<int> img(n);
  for (int a = 0; a < n; ++a) img[a] = n - 1 - a;
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw PreconditionError("simple reflection index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw PreconditionError("transposition indices out of range");
  auto p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> img;
  img.reserve(one_based.size());
  for (int v : one_based) img.push_back(v - 1);
  try {
    return Permutation(std::move(img));
  } catch (const PreconditionError&) {
    throw ParseError("not a permutation of 1..n");
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  if (text.empty()) throw ParseError("empty permutation");
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad permutation entry '" + token + "'");
      vals.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation digit in '" + std::string(text) + "'");
      vals.push_back(c - '0');
    }
  }
  return from_one_line(vals);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t a = 0; a < img_.size(); ++a) out[a] = img_[a] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw ShapeMismatch("permutation sizes differ");
  std::vector<int> img(img_.size());
  for (std::size_t a = 0; a < img_.size(); ++a) img[a] = img_[o.img_[a]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t a = 0; a < img_.size(); ++a) img[img_[a]] = static_cast<int>(a);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < img_.size(); ++a)
    for (std::size_t b = a + 1; b < img_.size(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(img_.size(), false);
  int cycles = 0;
  for (std::size_t a = 0; a < img_.size(); ++a) {
    if (seen[a]) continue;
    ++cycles;
    for (std::size_t b = a; !seen[b]; b = img_[b]) seen[b] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (std::size_t a = 0; a < img_.size(); ++a)
    if (img_[a] != static_cast<int>(a)) return false;
  return true;
}

bool Permutation::has_left_descent(int i) const {
  // Positions of the values i-1 and i (0-based values).
  int pos_lo = -1, pos_hi = -1;
  for (int a = 0; a < size(); ++a) {
    if (img_[a] == i - 1) pos_lo = a;
    if (img_[a] == i) pos_hi = a;
  }
  return pos_hi < pos_lo;
}

bool Permutation::has_right_descent(int i) const { return img_[i - 1] > img_[i]; }

Permutation Permutation::left_multiply_simple(int i) const {
  Permutation p(*this);
  for (int& v : p.img_) {
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  }
  return p;
}

Permutation Permutation::right_multiply_simple(int i) const {
  Permutation p(*this);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int v : img_) c = (c << 4) | static_cast<std::uint64_t>(v);
  return c;
}

std::string Permutation::to_string() const {
  std::string s;
  const bool digits = size() <= 9;
  for (std::size_t a = 0; a < img_.size(); ++a) {
    if (digits) {
      s.push_back(static_cast<char>('1' + img_[a]));
    } else {
      if (a) s.push_back(',');
      s += std::to_string(img_[a] + 1);
    }
  }
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw ShapeMismatch("bruhat_leq: permutation sizes differ");
  const int n = x.size();
  // Row i of the running counts: #{a <= i : perm(a) <= j}.
  std::vector<int> cx(n, 0), cy(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = x(i); j < n; ++j) ++cx[j];
    for (int j = y(i); j < n; ++j) ++cy[j];
    for (int j = 0; j < n; ++j)
      if (cx[j] < cy[j]) return false;
  }
  return true;
}

std::vector<Permutation> bruhat_covers(const Permutation& w) {
  std::vector<Permutation> out;
  const int n = w.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (w(a) > w(b)) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c) blocked = w(a) < w(c) && w(c) < w(b);
      if (!blocked) out.push_back(w * Permutation::transposition(n, a + 1, b + 1));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> bruhat_coatoms(const Permutation& w) {
  std::vector<Permutation> out;
  const int n = w.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (w(a) < w(b)) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c) blocked = w(b) < w(c) && w(c) < w(a);
      if (!blocked) out.push_back(w * Permutation::transposition(n, a + 1, b + 1));
    }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement::WeylElement(EmbeddingShape shape, std::vector<Permutation> parts)
    : shape_(shape), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != shape_.sigma)
    throw ShapeMismatch("WeylElement: expected " + std::to_string(shape_.sigma) + " parts");
  for (const auto& p : parts_)
    if (p.size() != shape_.n) throw ShapeMismatch("WeylElement: part has wrong size");
}

WeylElement WeylElement::identity(const EmbeddingShape& shape) {
  return WeylElement(shape, std::vector<Permutation>(shape.sigma, Permutation::identity(shape.n)));
}

WeylElement WeylElement::longest(const EmbeddingShape& shape) {
  return WeylElement(shape, std::vector<Permutation>(shape.sigma, Permutation::longest(shape.n)));
}

WeylElement WeylElement::parse(const EmbeddingShape& shape, std::string_view text) {
  std::vector<Permutation> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
    parts.push_back(Permutation::parse(piece));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (static_cast<int>(parts.size()) != shape.sigma)
    throw ParseError("expected " + std::to_string(shape.sigma) + " parts in '" +
                     std::string(text) + "'");
  for (const auto& p : parts)
    if (p.size() != shape.n)
      throw ParseError("permutation '" + p.to_string() + "' is not in S_" + std::to_string(shape.n));
  return WeylElement(shape, std::move(parts));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require_same_shape(shape_, o.shape_, "multiply");
  std::vector<Permutation> parts;
  parts.reserve(parts_.size());
  for (std::size_t t = 0; t < parts_.size(); ++t) parts.push_back(parts_[t] * o.parts_[t]);
  return WeylElement(shape_, std::move(parts));
}

WeylElement WeylElement::inverse() const {
  std::vector<Permutation> parts;
  for (const auto& p : parts_) parts.push_back(p.inverse());
  return WeylElement(shape_, std::move(parts));
}

int WeylElement::length() const {
  int l = 0;
  for (const auto& p : parts_) l += p.length();
  return l;
}

bool WeylElement::is_identity() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Permutation& p) { return p.is_identity(); });
}

std::string WeylElement::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (t) s.push_back('.');
    s += parts_[t].to_string();
  }
  return s;
}

bool WeylElement::operator<(const WeylElement& o) const {
  const int la = length(), lb = o.length();
  if (la != lb) return la < lb;
  if (shape_ != o.shape_) return shape_ < o.shape_;
  return parts_ < o.parts_;
}

IntegralWeight IntegralWeight::zero(const EmbeddingShape& shape) {
  return IntegralWeight(std::vector<std::vector<long long>>(shape.sigma, std::vector<long long>(shape.n, 0)));
}

IntegralWeight IntegralWeight::rho(const EmbeddingShape& shape) {
  auto w = zero(shape);
  for (auto& row : w.rows)
    for (int i = 0; i < shape.n; ++i) row[i] = shape.n - 1 - i;
  return w;
}

EmbeddingShape IntegralWeight::shape() const {
  if (rows.empty() || rows[0].empty()) throw PreconditionError("empty weight");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw PreconditionError("ragged weight");
  return EmbeddingShape(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
}

int length(const WeylElement& w) { return w.length(); }

bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
  require_same_shape(x.shape(), y.shape(), "bruhat_leq");
  for (int t = 0; t < x.shape().sigma; ++t)
    if (!bruhat_leq(x.part(t), y.part(t))) return false;
  return true;
}

WeylElement longest_element(const EmbeddingShape& shape) { return WeylElement::longest(shape); }
WeylElement identity_element(const EmbeddingShape& shape) { return WeylElement::identity(shape); }

namespace {

std::vector<WeylElement> build_all(const EmbeddingShape& shape) {
  const auto perms = all_permutations(shape.n);
  std::vector<WeylElement> out;
  std::vector<std::size_t> idx(shape.sigma, 0);
  while (true) {
    std::vector<Permutation> parts;
    for (int t = 0; t < shape.sigma; ++t) parts.push_back(perms[idx[t]]);
    out.emplace_back(shape, std::move(parts));
    int t = shape.sigma - 1;
    while (t >= 0 && ++idx[t] == perms.size()) idx[t--] = 0;
    if (t < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<WeylElement> all_elements(const EmbeddingShape& shape) {
  static std::mutex mu;
  static std::map<EmbeddingShape, std::vector<WeylElement>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
  }
  auto built = build_all(shape);
  std::lock_guard lock(mu);
  return cache.emplace(shape, std::move(built)).first->second;
}

std::vector<WeylElement> upper_interval(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (const auto& v : all_elements(w.shape()))
    if (bruhat_leq(w, v)) out.push_back(v);
  return out;
}

std::vector<WeylElement> lower_interval(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (const auto& v : all_elements(w.shape()))
    if (bruhat_leq(v, w)) out.push_back(v);
  return out;
}

std::vector<WeylElement> bruhat_interval(const WeylElement& lo, const WeylElement& hi) {
  require_same_shape(lo.shape(), hi.shape(), "bruhat_interval");
  std::vector<WeylElement> out;
  if (!bruhat_leq(lo, hi)) return out;
  for (const auto& v : all_elements(lo.shape()))
    if (v.length() >= lo.length() && v.length() <= hi.length() && bruhat_leq(lo, v) &&
        bruhat_leq(v, hi))
      out.push_back(v);
  return out;
}

std::vector<WeylElement> bruhat_covers(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (int t = 0; t < w.shape().sigma; ++t)
    for (const auto& c : bruhat_covers(w.part(t))) {
      auto parts = w.parts();
      parts[t] = c;
      out.emplace_back(w.shape(), std::move(parts));
    }
  std::sort(out.begin(), out.end());
  return out;
}

IntegralWeight apply_to_weights(const WeylElement& w, const IntegralWeight& h) {
  require_same_shape(w.shape(), h.shape(), "apply_to_weights");
  IntegralWeight out = h;
  for (int t = 0; t < w.shape().sigma; ++t) {
    const auto inv = w.part(t).inverse();
    for (int i = 0; i < w.shape().n; ++i) out.rows[t][i] = h.rows[t][inv(i)];
  }
  return out;
}

IntegralWeight dot_action(const WeylElement& w, const IntegralWeight& lambda) {
  const auto rho = IntegralWeight::rho(w.shape());
  IntegralWeight shifted = lambda;
  require_same_shape(w.shape(), lambda.shape(), "dot_action");
  for (int t = 0; t < w.shape().sigma; ++t)
    for (int i = 0; i < w.shape().n; ++i) shifted.rows[t][i] += rho.rows[t][i];
  auto out = apply_to_weights(w, shifted);
  for (int t = 0; t < w.shape().sigma; ++t)
    for (int i = 0; i < w.shape().n; ++i) out.rows[t][i] -= rho.rows[t][i];
  return out;
}

bool is_distinct_simple_product(const WeylElement& w) { return d_of(w) == w.length(); }

std::vector<Diamond> all_diamonds(const WeylElement& w) {
  const auto top = longest_element(w.shape());
  if (w.length() > top.length() - 2)
    throw PreconditionError("diamond requires lg(w) <= lg(w0) - 2");
  std::vector<Diamond> out;
  for (const auto& w3 : all_elements(w.shape())) {
    if (w3.length() != w.length() + 2 || !bruhat_leq(w, w3)) continue;
    auto mid = bruhat_interval(w, w3);
    std::vector<WeylElement> inner;
    for (auto& v : mid)
      if (v.length() == w.length() + 1) inner.push_back(v);
    if (inner.size() != 2)
      throw IdentityFailure("length-2 interval [" + w.to_string() + ", " + w3.to_string() +
                            "] does not have exactly two middle elements");
    out.push_back({inner[0], inner[1], w3});
  }
  return out;
}

Diamond diamond(const WeylElement& w) {
  auto all = all_diamonds(w);
  if (all.empty()) throw IdentityFailure("no length-2 upper bound found for " + w.to_string());
  return all.front();
}

}  // namespace trilocal
