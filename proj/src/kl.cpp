#include "trilocal/kl.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "trilocal/errors.hpp"

namespace trilocal {

KLPolynomial::KLPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

KLPolynomial KLPolynomial::monomial(int degree, long long c) {
  std::vector<long long> v(degree + 1, 0);
  v[degree] = c;
  return KLPolynomial(std::move(v));
}

void KLPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long KLPolynomial::at_one() const {
  long long s = 0;
  for (auto x : c_) s += x;
  return s;
}

KLPolynomial KLPolynomial::operator+(const KLPolynomial& o) const {
  std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return KLPolynomial(std::move(v));
}

KLPolynomial KLPolynomial::operator-(const KLPolynomial& o) const {
  std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return KLPolynomial(std::move(v));
}

KLPolynomial KLPolynomial::operator*(const KLPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return KLPolynomial(std::move(v));
}

KLPolynomial KLPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<long long> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return KLPolynomial(std::move(v));
}

KLPolynomial KLPolynomial::truncated(int d) const {
  if (d < 0) return {};
  std::vector<long long> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), d + 1));
  return KLPolynomial(std::move(v));
}

std::string KLPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    long long c = c_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (k == 0 || a != 1) s += std::to_string(a);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

struct KLEngine::Table {
  int n;
  std::vector<Permutation> perms;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<int> lengths;
  // left[i-1][k] = index of s_i * perms[k].
  std::vector<std::vector<std::uint32_t>> left;
  // Indices grouped by length.
  std::vector<std::vector<std::uint32_t>> by_length;

  mutable std::shared_mutex mu;
  std::unordered_map<std::uint64_t, KLPolynomial> memo;

  explicit Table(int n_) : n(n_), perms(all_permutations(n_)) {
    for (std::uint32_t k = 0; k < perms.size(); ++k) {
      index.emplace(perms[k].code(), k);
      lengths.push_back(perms[k].length());
    }
    left.assign(n > 1 ? n - 1 : 0, std::vector<std::uint32_t>(perms.size()));
    for (int i = 1; i < n; ++i)
      for (std::uint32_t k = 0; k < perms.size(); ++k)
        left[i - 1][k] = index.at(perms[k].left_multiply_simple(i).code());
    int top = n * (n - 1) / 2;
    by_length.assign(top + 1, {});
    for (std::uint32_t k = 0; k < perms.size(); ++k) by_length[lengths[k]].push_back(k);
  }

  std::uint32_t idx(const Permutation& p) const { return index.at(p.code()); }
  std::uint64_t key(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint64_t>(x) * perms.size() + y;
  }
  bool leq(std::uint32_t x, std::uint32_t y) const {
    return lengths[x] <= lengths[y] && bruhat_leq(perms[x], perms[y]);
  }

  std::optional<KLPolynomial> lookup(std::uint32_t x, std::uint32_t y) const {
    std::shared_lock lock(mu);
    auto it = memo.find(key(x, y));
    if (it == memo.end()) return std::nullopt;
    return it->second;
  }

  void store(std::uint32_t x, std::uint32_t y, const KLPolynomial& p) {
    std::unique_lock lock(mu);
    memo.emplace(key(x, y), p);
  }

  long long mu_coeff(std::uint32_t z, std::uint32_t v) {
    int d = lengths[v] - lengths[z];
    if (d <= 0 || d % 2 == 0) return 0;
    return get(z, v).coeff((d - 1) / 2);
  }

  KLPolynomial get(std::uint32_t x, std::uint32_t w) {
    if (x == w) return KLPolynomial::one();
    if (!leq(x, w)) return {};
    if (auto hit = lookup(x, w)) return *hit;

    int s = 1;
    while (!perms[w].has_left_descent(s)) ++s;
    const std::uint32_t v = left[s - 1][w];
    const std::uint32_t sx = left[s - 1][x];
    const int c = lengths[sx] < lengths[x] ? 1 : 0;

    KLPolynomial p = get(sx, v).shifted(1 - c) + get(x, v).shifted(c);
    for (int len = lengths[x]; len < lengths[v]; ++len) {
      for (std::uint32_t z : by_length[len]) {
        if (lengths[left[s - 1][z]] > lengths[z]) continue;
        if (!leq(x, z) || !leq(z, v)) continue;
        long long m = mu_coeff(z, v);
        if (m == 0) continue;
        p = p - (get(x, z) * KLPolynomial::monomial((lengths[w] - len) / 2, m));
      }
    }
    store(x, w, p);
    return p;
  }
};

struct KLEngine::Impl {
  std::mutex tables_mu;
  std::map<int, std::unique_ptr<Table>> tables;
};

KLEngine::KLEngine() : impl_(std::make_unique<Impl>()) {}
KLEngine::~KLEngine() = default;

KLEngine& KLEngine::shared() {
  static KLEngine engine;
  return engine;
}

KLEngine::Table& KLEngine::table(int n) {
  std::lock_guard lock(impl_->tables_mu);
  auto& slot = impl_->tables[n];
  if (!slot) {
    if (n > 8) throw PreconditionError("KL tables are limited to n <= 8");
    slot = std::make_unique<Table>(n);
  }
  return *slot;
}

KLPolynomial KLEngine::polynomial(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw ShapeMismatch("kl_polynomial: permutation sizes differ");
  auto& t = table(x.size());
  return t.get(t.idx(x), t.idx(y));
}

KLPolynomial KLEngine::polynomial(const WeylElement& x, const WeylElement& y) {
  require_same_shape(x.shape(), y.shape(), "kl_polynomial");
  KLPolynomial p = KLPolynomial::one();
  for (int t = 0; t < x.shape().sigma; ++t) {
    p = p * polynomial(x.part(t), y.part(t));
    if (p.is_zero()) break;
  }
  return p;
}

long long KLEngine::mu(const Permutation& x, const Permutation& y) {
  auto& t = table(x.size());
  return t.mu_coeff(t.idx(x), t.idx(y));
}

std::size_t KLEngine::cached_entries() const {
  std::lock_guard lock(impl_->tables_mu);
  std::size_t total = 0;
  for (auto& [n, t] : impl_->tables) {
    std::shared_lock l(t->mu);
    total += t->memo.size();
  }
  return total;
}

void KLEngine::clear() {
  std::lock_guard lock(impl_->tables_mu);
  impl_->tables.clear();
}

void KLEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // a missing cache file is not an error
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("KL cache '" + path + "': " + e.what());
  }
  if (!j.is_object() || j.value("version", 0) != 1 || !j.contains("entries"))
    throw ParseError("KL cache '" + path + "': unsupported format");
  for (auto& [k, v] : j["entries"].items()) {
    auto c1 = k.find(':'), c2 = k.rfind(':');
    if (c1 == std::string::npos || c1 == c2) throw ParseError("KL cache key '" + k + "'");
    int n = std::stoi(k.substr(0, c1));
    auto x = Permutation::parse(k.substr(c1 + 1, c2 - c1 - 1));
    auto y = Permutation::parse(k.substr(c2 + 1));
    if (x.size() != n || y.size() != n) throw ParseError("KL cache key '" + k + "'");
    auto& t = table(n);
    t.store(t.idx(x), t.idx(y), KLPolynomial(v.get<std::vector<long long>>()));
  }
}

void KLEngine::save_cache(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::object();
  {
    std::lock_guard lock(impl_->tables_mu);
    for (auto& [n, t] : impl_->tables) {
      std::shared_lock l(t->mu);
      for (auto& [key, p] : t->memo) {
        auto x = key / t->perms.size(), y = key % t->perms.size();
        entries[std::to_string(n) + ":" + t->perms[x].to_string() + ":" + t->perms[y].to_string()] =
            p.coeffs();
      }
    }
  }
  nlohmann::json j = {{"version", 1}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw Error("cannot write KL cache '" + path + "'");
  out << j.dump() << '\n';
}

KLPolynomial kl_polynomial(const WeylElement& x, const WeylElement& y) {
  return KLEngine::shared().polynomial(x, y);
}

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& y) {
  return KLEngine::shared().polynomial(x, y);
}

long long verma_multiplicity(const WeylElement& w, const WeylElement& wp) {
  const auto w0 = longest_element(w.shape());
  return kl_polynomial(w0 * w, w0 * wp).at_one();
}

long long pi_multiplicity(const WeylElement& w, const WeylElement& wp) {
  return verma_multiplicity(w, wp);
}

}  // namespace trilocal
