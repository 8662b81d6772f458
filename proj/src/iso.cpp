#include "leibniz/iso.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "leibniz/derivations.hpp"
#include "leibniz/error.hpp"
#include "leibniz/kernels.hpp"

namespace leib {

HomCheck verify_homomorphism(const Algebra& L, const Algebra& M, const Matrix& f) {
  if (!(L.field() == M.field()) || !(f.field() == L.field())) {
    throw FieldMismatch("verify_homomorphism: fields differ");
  }
  if (f.rows() != M.dim() || f.cols() != L.dim()) {
    throw DimensionMismatch("verify_homomorphism: map must be dim M x dim L");
  }
  HomCheck res;
  res.is_hom = true;
  std::vector<Vector> images;
  for (std::size_t j = 0; j < L.dim(); ++j) images.push_back(f.column(j));
  for (std::size_t i = 0; i < L.dim() && res.is_hom; ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (f.apply(L.bracket(i, j)) != bracket_eval(M, images[i], images[j])) {
        res.is_hom = false;
        break;
      }
    }
  }
  res.is_iso = res.is_hom && f.rows() == f.cols() && rank(f) == f.rows();
  return res;
}

Algebra change_of_basis(const Algebra& L, const Matrix& P) {
  if (P.rows() != L.dim() || P.cols() != L.dim()) throw DimensionMismatch("change_of_basis: P must be dim x dim");
  const Matrix Q = P.inverse();
  const std::size_t n = L.dim();
  std::vector<Vector> q;
  for (std::size_t j = 0; j < n; ++j) q.push_back(Q.column(j));
  Algebra out(L.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set_bracket(i, j, P.apply(bracket_eval(L, q[i], q[j])));
  }
  return out;
}

namespace {

nlohmann::ordered_json fingerprint_doc(const Fingerprint& f) {
  nlohmann::ordered_json j;
  j["dim"] = f.dim;
  j["right_leibniz"] = f.flags.right_leibniz;
  j["left_leibniz"] = f.flags.left_leibniz;
  j["symmetric"] = f.flags.symmetric;
  j["antisymmetric"] = f.flags.antisymmetric;
  j["lie"] = f.flags.lie;
  j["derived_series"] = f.derived;
  j["lower_central_series"] = f.lower_central;
  j["left_center"] = f.left_center;
  j["right_center"] = f.right_center;
  j["center"] = f.center;
  j["lie_center"] = f.lie_center;
  j["leibniz_kernel"] = f.leibniz_kernel;
  j["der"] = f.der;
  j["ader"] = f.ader;
  j["bider"] = f.bider;
  j["der_lie"] = f.der_lie;
  j["inn"] = f.inn;
  j["nilpotency_class"] = f.nilpotency_class ? nlohmann::ordered_json(*f.nilpotency_class) : nullptr;
  j["solvability_class"] = f.solvability_class ? nlohmann::ordered_json(*f.solvability_class) : nullptr;
  return j;
}

}  // namespace

std::string Fingerprint::json() const { return fingerprint_doc(*this).dump(2); }

std::string Fingerprint::table() const {
  std::ostringstream os;
  const auto doc = fingerprint_doc(*this);
  for (const auto& [key, value] : doc.items()) {
    std::string shown = value.is_null() ? "-" : value.dump();
    os << key << std::string(key.size() < 22 ? 22 - key.size() : 1, ' ') << shown << "\n";
  }
  return os.str();
}

std::vector<std::string> Fingerprint::differences(const Fingerprint& other) const {
  const auto a = fingerprint_doc(*this);
  const auto b = fingerprint_doc(other);
  std::vector<std::string> out;
  for (const auto& [key, value] : a.items()) {
    if (b.at(key) != value) out.push_back(key);
  }
  return out;
}

Fingerprint fingerprint(const Algebra& L) {
  require_right_leibniz(L, "fingerprint");
  Fingerprint f;
  f.dim = L.dim();
  f.flags = identity_flags(L);
  const SeriesReport d = series(L, SeriesKind::Derived);
  const SeriesReport lc = series(L, SeriesKind::LowerCentral);
  f.derived = d.dims;
  f.lower_central = lc.dims;
  f.solvability_class = d.length;
  f.nilpotency_class = lc.length;
  const Centers c = centers(L);
  f.left_center = c.left.dim();
  f.right_center = c.right.dim();
  f.center = c.center.dim();
  f.lie_center = c.lie_center.dim();
  f.leibniz_kernel = leibniz_kernel(L).dim();
  f.der = derivation_space(L).dim();
  f.ader = antiderivation_space(L).dim();
  f.bider = biderivation_space(L).dim();
  f.der_lie = lie_derivation_space(L).dim();
  f.inn = inner_derivations(L).dim();
  return f;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::FingerprintDiffers: return "fingerprint-differs";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

int default_workers() {
  if (const char* env = std::getenv("LEIBNIZ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<int>(v);
  }
  return kernels::max_threads();
}

namespace {

using Res = std::uint32_t;

// Residue arithmetic for the search. Everything is reduced mod p < 2^31.
struct ModP {
  std::uint64_t p;
  Res mul(Res a, Res b) const { return static_cast<Res>(std::uint64_t{a} * b % p); }
  Res add(Res a, Res b) const { return static_cast<Res>((std::uint64_t{a} + b) % p); }
  Res sub(Res a, Res b) const { return static_cast<Res>((std::uint64_t{a} + p - b) % p); }
  Res inv(Res a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Res>(r);
  }
};

std::vector<Res> residues(std::span<const Scalar> v) {
  std::vector<Res> out;
  for (const auto& s : v) out.push_back(static_cast<Res>(s.residue()));
  return out;
}

// Columns of P: a basis of L in which every derived-series term is spanned
// by a leading segment, deepest term first.
Matrix adapted_basis(const Algebra& L) {
  const SeriesReport d = series(L, SeriesKind::Derived);
  std::vector<Vector> chosen;
  Subspace cur = Subspace::zero(L.field(), L.dim());
  std::vector<Subspace> terms = d.terms;
  terms.push_back(Subspace::full(L.field(), L.dim()));
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    for (const auto& v : it->basis_vectors()) {
      if (cur.contains(v)) continue;
      chosen.push_back(v);
      cur = subspace_sum(cur, Subspace::span(L.field(), L.dim(), std::vector<Vector>{v}));
    }
  }
  return Matrix::from_columns(L.field(), L.dim(), chosen);
}

std::vector<std::pair<Subspace, Subspace>> characteristic_pairs(const Algebra& L, const Algebra& M) {
  std::vector<std::pair<Subspace, Subspace>> out;
  for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
    const auto a = series(L, kind);
    const auto b = series(M, kind);
    for (std::size_t t = 0; t < std::min(a.terms.size(), b.terms.size()); ++t) {
      out.emplace_back(a.terms[t], b.terms[t]);
    }
  }
  const Centers cl = centers(L);
  const Centers cm = centers(M);
  out.emplace_back(cl.left, cm.left);
  out.emplace_back(cl.right, cm.right);
  out.emplace_back(cl.center, cm.center);
  out.emplace_back(cl.lie_center, cm.lie_center);
  out.emplace_back(leibniz_kernel(L), leibniz_kernel(M));
  return out;
}

struct SearchPlan {
  ModP mod;
  std::size_t n = 0;
  std::vector<Res> cl;  // adapted L
  std::vector<Res> cm;  // M
  std::vector<std::vector<Res>> candidates;  // per level, n residues each
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks;  // per level

  Res cL(std::size_t i, std::size_t j, std::size_t k) const { return cl[(i * n + j) * n + k]; }
  Res cM(std::size_t i, std::size_t j, std::size_t k) const { return cm[(i * n + j) * n + k]; }
};

struct Shared {
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class Worker {
 public:
  Worker(const SearchPlan& plan, Shared& shared, long top)
      : plan_(plan), shared_(shared), top_(top), images_(plan.n * plan.n, 0), ech_(plan.n * plan.n, 0),
        pivots_(plan.n, 0) {}

  bool run() {
    const std::size_t n = plan_.n;
    const Res* v = plan_.candidates[0].data() + static_cast<std::size_t>(top_) * n;
    if (!try_assign(0, v)) return false;
    return descend(1);
  }

  const std::vector<Res>& images() const { return images_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool aborted() {
    if ((++nodes_ & 0xfff) == 0 && shared_.deadline && std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.timed_out = true;
    }
    return shared_.timed_out.load(std::memory_order_relaxed) ||
           shared_.best.load(std::memory_order_relaxed) < top_;
  }

  // Reduces v against the echelon rows of levels < level; records it as row
  // `level` if independent.
  bool independent(std::size_t level, const Res* v) {
    const std::size_t n = plan_.n;
    Res* row = ech_.data() + level * n;
    std::copy(v, v + n, row);
    for (std::size_t r = 0; r < level; ++r) {
      const Res coef = row[pivots_[r]];
      if (coef == 0) continue;
      const Res* prev = ech_.data() + r * n;
      for (std::size_t c = 0; c < n; ++c) {
        if (prev[c]) row[c] = plan_.mod.sub(row[c], plan_.mod.mul(coef, prev[c]));
      }
    }
    std::size_t pc = 0;
    while (pc < n && row[pc] == 0) ++pc;
    if (pc == n) return false;
    const Res inv = plan_.mod.inv(row[pc]);
    for (std::size_t c = pc; c < n; ++c) row[c] = plan_.mod.mul(row[c], inv);
    pivots_[level] = pc;
    return true;
  }

  bool brackets_hold(std::size_t level) const {
    const std::size_t n = plan_.n;
    const ModP& m = plan_.mod;
    for (const auto& [i, j] : plan_.checks[level]) {
      const Res* gi = images_.data() + i * n;
      const Res* gj = images_.data() + j * n;
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t lhs = 0, rhs = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (plan_.cL(i, j, t)) lhs += std::uint64_t{plan_.cL(i, j, t)} * images_[t * n + k] % m.p;
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (!gi[a]) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (gj[b] && plan_.cM(a, b, k)) rhs += std::uint64_t{m.mul(gi[a], gj[b])} * plan_.cM(a, b, k) % m.p;
          }
        }
        if (lhs % m.p != rhs % m.p) return false;
      }
    }
    return true;
  }

  bool try_assign(std::size_t level, const Res* v) {
    if (!independent(level, v)) return false;
    std::copy(v, v + plan_.n, images_.begin() + static_cast<std::ptrdiff_t>(level * plan_.n));
    return brackets_hold(level);
  }

  bool descend(std::size_t level) {
    if (level == plan_.n) return true;
    const auto& cands = plan_.candidates[level];
    for (std::size_t off = 0; off < cands.size(); off += plan_.n) {
      if (aborted()) return false;
      if (try_assign(level, cands.data() + off) && descend(level + 1)) return true;
    }
    return false;
  }

  const SearchPlan& plan_;
  Shared& shared_;
  long top_;
  std::vector<Res> images_;
  std::vector<Res> ech_;
  std::vector<std::size_t> pivots_;
  std::uint64_t nodes_ = 0;
};

// All nonzero vectors of S in lexicographic coordinate order.
std::vector<Res> enumerate_subspace(const Subspace& S, const ModP& mod) {
  const std::size_t n = S.ambient_dim();
  const std::size_t d = S.dim();
  std::vector<std::vector<Res>> basis;
  for (const auto& b : S.basis_vectors()) basis.push_back(residues(b));
  std::vector<Res> out;
  std::vector<Res> coef(d, 0);
  while (true) {
    // next tuple, last coordinate fastest
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++coef[pos] < mod.p) break;
      coef[pos] = 0;
      if (pos == 0) return out;
    }
    if (d == 0) return out;
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t s = 0;
      for (std::size_t t = 0; t < d; ++t) s += std::uint64_t{coef[t]} * basis[t][c] % mod.p;
      out.push_back(static_cast<Res>(s % mod.p));
    }
  }
}

}  // namespace

SearchResult search_isomorphism(const Algebra& L, const Algebra& M, const SearchOptions& opts) {
  if (!(L.field() == M.field())) throw FieldMismatch("search_isomorphism: fields differ");
  if (!L.field().is_finite()) throw FieldNotFinite("isomorphism search needs a finite field; over Q only verification is supported");
  SearchResult res;
  if (!(fingerprint(L) == fingerprint(M))) {
    res.status = SearchStatus::FingerprintDiffers;
    return res;
  }
  const std::size_t n = L.dim();
  const FieldDesc& F = L.field();
  const Matrix P = adapted_basis(L);
  const Algebra A = change_of_basis(L, P.inverse());

  SearchPlan plan;
  plan.mod = ModP{F.p()};
  plan.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        plan.cl.push_back(static_cast<Res>(A.c(i, j, k).residue()));
        plan.cm.push_back(static_cast<Res>(M.c(i, j, k).residue()));
      }
    }
  }
  const auto pairs = characteristic_pairs(L, M);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector v = P.column(i);
    Subspace allowed = Subspace::full(F, n);
    for (const auto& [sl, sm] : pairs) {
      if (sl.contains(v)) allowed = subspace_intersect(allowed, sm);
    }
    plan.candidates.push_back(enumerate_subspace(allowed, plan.mod));
  }
  plan.checks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t level = std::max(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!A.c(i, j, k).is_zero()) level = std::max(level, k);
      }
      plan.checks[level].emplace_back(i, j);
    }
  }

  Shared shared;
  if (opts.time_limit) shared.deadline = std::chrono::steady_clock::now() + *opts.time_limit;
  const long tops = n == 0 ? 0 : static_cast<long>(plan.candidates[0].size() / n);
  const int workers = opts.workers > 0 ? opts.workers : default_workers();
  std::vector<Res> found;

  if (n == 0) {
    res.status = SearchStatus::Found;
    res.witness = Matrix(F, 0, 0);
    return res;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long top = 0; top < tops; ++top) {
    if (shared.timed_out || shared.best.load() < top) continue;
    Worker w(plan, shared, top);
    const bool ok = w.run();
    shared.nodes += w.nodes();
    if (ok) {
#pragma omp critical(leib_iso_best)
      {
        if (top < shared.best.load()) {
          shared.best = top;
          found = w.images();
        }
      }
    }
  }
  res.nodes = shared.nodes;
  if (shared.best.load() == std::numeric_limits<long>::max()) {
    res.status = shared.timed_out ? SearchStatus::Timeout : SearchStatus::Exhausted;
    return res;
  }
  Matrix G(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) G.at(k, i) = Scalar(F, static_cast<long>(found[i * n + k]));
  }
  Matrix f = G * P.inverse();
  if (!verify_homomorphism(L, M, f).is_iso) {
    throw InternalInconsistency("isomorphism search produced a map that fails verification");
  }
  res.status = SearchStatus::Found;
  res.witness = std::move(f);
  return res;
}

std::optional<Matrix> find_isomorphism(const Algebra& L, const Algebra& M) {
  SearchOptions opts;
  opts.workers = 1;
  auto r = search_isomorphism(L, M, opts);
  return r.witness;
}

}  // namespace leib
