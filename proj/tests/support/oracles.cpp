#include "oracles.hpp"

#include <stdexcept>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/iso.hpp"

namespace leib::oracle {

namespace {

using Op = std::vector<std::uint32_t>;

// x[a] at (row a*n + b) means operator entry (a, b); X e_j is column j.
std::uint32_t bracket_coord(const Raw& a, const std::uint32_t* x, const std::uint32_t* y, std::size_t k) {
  const std::size_t n = a.n;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      acc = (acc + std::uint64_t(x[i]) * y[j] % a.p * a.c[(i * n + j) * n + k]) % a.p;
    }
  }
  return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> column(const Op& X, std::size_t n, std::size_t j) {
  std::vector<std::uint32_t> v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = X[a * n + j];
  return v;
}

bool satisfies(const Raw& a, const Op& X, bool anti) {
  const std::size_t n = a.n;
  const std::uint32_t p = a.p;
  std::vector<std::vector<std::uint32_t>> cols(n), units(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    cols[j] = column(X, n, j);
    units[j][j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t lhs = 0;
        for (std::size_t m = 0; m < n; ++m) lhs = (lhs + std::uint64_t(X[k * n + m]) * a.c[(i * n + j) * n + m]) % p;
        const std::uint64_t t1 = bracket_coord(a, cols[i].data(), units[j].data(), k);
        const std::uint64_t t2 = anti ? bracket_coord(a, cols[j].data(), units[i].data(), k)
                                      : bracket_coord(a, units[i].data(), cols[j].data(), k);
        const std::uint64_t rhs = anti ? (t1 + p - t2) % p : (t1 + t2) % p;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::vector<Op> enumerate(const Raw& a, bool anti) {
  const std::size_t N = a.n * a.n;
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < N; ++t) {
    total *= a.p;
    if (total > 50'000'000) throw std::runtime_error("oracle enumeration too large");
  }
  std::vector<Op> out;
  Op X(N, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t t = 0; t < N; ++t) {
      X[t] = static_cast<std::uint32_t>(r % a.p);
      r /= a.p;
    }
    if (satisfies(a, X, anti)) out.push_back(X);
  }
  return out;
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 1, b = x, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::size_t rank_mod(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t t = 0; t < cols; ++t) m[i][t] = static_cast<std::uint32_t>((m[i][t] + p - f * m[r][t] % p) % p);
    }
    ++r;
  }
  return r;
}

// One equation per (i, j, k): X[e_i,e_j] - [X e_i, e_j] -/+ ..., unknown X(a,b) at a*n+b.
std::size_t rule_dim(const Raw& a, bool anti) {
  const std::size_t n = a.n;
  const std::uint32_t p = a.p;
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) { return a.c[(i * n + j) * n + k]; };
  std::vector<std::vector<std::uint32_t>> sys;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::uint32_t> row(n * n, 0);
        auto addv = [&](std::size_t idx, std::uint64_t v) { row[idx] = static_cast<std::uint32_t>((row[idx] + v) % p); };
        for (std::size_t m = 0; m < n; ++m) {
          addv(k * n + m, C(i, j, m));
          addv(m * n + i, p - C(m, j, k));
          if (anti) addv(m * n + j, C(m, i, k));
          else addv(m * n + j, p - C(i, m, k));
        }
        sys.push_back(std::move(row));
      }
    }
  }
  return n * n - rank_mod(std::move(sys), p);
}

}  // namespace

std::size_t derivation_dim_by_rank(const Raw& a) { return rule_dim(a, false); }
std::size_t antiderivation_dim_by_rank(const Raw& a) { return rule_dim(a, true); }

Raw raw(const Algebra& L) {
  if (!L.field().is_finite()) throw FieldNotFinite("oracle needs F_p");
  Raw a{static_cast<std::uint32_t>(L.field().p()), L.dim(), {}};
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) a.c.push_back(static_cast<std::uint32_t>(L.c(i, j, k).residue()));
    }
  }
  return a;
}

std::vector<Op> derivations(const Raw& a) { return enumerate(a, false); }
std::vector<Op> antiderivations(const Raw& a) { return enumerate(a, true); }

std::uint64_t biderivation_count(const Raw& a) {
  const auto ders = derivations(a);
  const auto aders = antiderivations(a);
  const std::size_t n = a.n;
  std::vector<std::uint32_t> unit(n, 0);
  std::uint64_t count = 0;
  for (const auto& d : ders) {
    for (const auto& D : aders) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::fill(unit.begin(), unit.end(), 0);
        unit[i] = 1;
        for (std::size_t j = 0; j < n && ok; ++j) {
          const auto dc = column(d, n, j), Dc = column(D, n, j);
          for (std::size_t k = 0; k < n && ok; ++k) {
            ok = bracket_coord(a, unit.data(), dc.data(), k) == bracket_coord(a, unit.data(), Dc.data(), k);
          }
        }
      }
      count += ok ? 1 : 0;
    }
  }
  return count;
}

std::uint64_t lie_center_count(const Raw& a) {
  const std::size_t n = a.n;
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < n; ++t) total *= a.p;
  std::vector<std::uint32_t> x(n), unit(n);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t t = 0; t < n; ++t) {
      x[t] = static_cast<std::uint32_t>(r % a.p);
      r /= a.p;
    }
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      std::fill(unit.begin(), unit.end(), 0);
      unit[j] = 1;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = (bracket_coord(a, x.data(), unit.data(), k) + bracket_coord(a, unit.data(), x.data(), k)) % a.p == 0;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

std::size_t log_p(std::uint64_t m, std::uint32_t p) {
  std::size_t e = 0;
  while (m > 1) {
    if (m % p) throw std::runtime_error("not a power of p");
    m /= p;
    ++e;
  }
  return e;
}

std::vector<Algebra> random_right_leibniz(const FieldDesc& F, std::size_t count, std::uint32_t seed,
                                          std::size_t max_dim) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_d(1, max_dim);
  std::uniform_int_distribution<long> val_d(1, static_cast<long>(F.p()) - 1);
  std::vector<Algebra> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1'000'000) throw std::runtime_error("random_right_leibniz: low acceptance");
    const std::size_t n = dim_d(rng);
    Algebra L(F, n);
    std::uniform_int_distribution<std::size_t> idx_d(0, n - 1);
    std::uniform_int_distribution<std::size_t> terms_d(1, n + 1);
    const std::size_t terms = terms_d(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      const std::size_t i = idx_d(rng), j = idx_d(rng), k = idx_d(rng);
      L.set(i, j, k, Scalar(F, val_d(rng)));
    }
    if (identity_flags(L).right_leibniz) out.push_back(std::move(L));
  }
  return out;
}

std::vector<Algebra> random_two_nilpotent(const FieldDesc& F, std::size_t count, std::uint32_t seed,
                                          std::size_t max_dim) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_d(2, max_dim);
  std::uniform_int_distribution<long> val_d(0, static_cast<long>(F.p()) - 1);
  std::vector<Algebra> out;
  while (out.size() < count) {
    const std::size_t n = dim_d(rng);
    std::uniform_int_distribution<std::size_t> gen_d(1, n - 1);
    const std::size_t g = gen_d(rng);
    Algebra L(F, n);
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t k = g; k < n; ++k) L.set(i, j, k, Scalar(F, val_d(rng)));
      }
    }
    out.push_back(std::move(L));
  }
  return out;
}

std::vector<Algebra> random_catalog_conjugates(const FieldDesc& F, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Algebra> bases;
  for (const auto& name : catalog::list()) {
    try {
      bases.push_back(catalog::get(name, F));
    } catch (const Error&) {
      // denominators not invertible in F, or a parameter constraint
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
  std::uniform_int_distribution<long> val_d(0, static_cast<long>(F.p()) - 1);
  std::vector<Algebra> out;
  while (out.size() < count) {
    const Algebra& L = bases[pick(rng)];
    const std::size_t n = L.dim();
    std::vector<Scalar> e;
    for (std::size_t t = 0; t < n * n; ++t) e.push_back(Scalar(F, val_d(rng)));
    const Matrix P(F, n, n, e);
    if (rank(P) != n) continue;
    out.push_back(change_of_basis(L, P));
  }
  return out;
}

std::vector<std::pair<std::string, Algebra>> suite() {
  const FieldDesc Q = FieldDesc::rationals();
  std::vector<std::pair<std::string, Algebra>> out;
  auto with = [&](const std::string& label, const std::string& name, long num, long den) {
    out.emplace_back(label, catalog::get(name, Scalar::fraction(Q, num, den)));
  };
  for (const char* name : {"L_A", "L_B", "L_1", "L_3", "L_4", "L_7", "L_8", "L_11", "L_12", "L_13", "d1",
                           "R5", "L39", "example_3_3"}) {
    out.emplace_back(name, catalog::get(name, Q));
  }
  with("L_2(2)", "L_2", 2, 1);
  with("L_2(-1)", "L_2", -1, 1);
  with("L_5(2)", "L_5", 2, 1);
  with("L_5(-1)", "L_5", -1, 1);
  with("L_6(2)", "L_6", 2, 1);
  with("L_6(1/4)", "L_6", 1, 4);
  with("L_9(2)", "L_9", 2, 1);
  with("L_10(2)", "L_10", 2, 1);
  return out;
}

}  // namespace leib::oracle
