#include "leibniz/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "leibniz/error.hpp"

namespace leib::catalog {

Algebra from_terms(const FieldDesc& F, std::size_t n, const std::vector<Term>& terms) {
  Algebra L(F, n);
  for (const auto& t : terms) {
    if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > n || t.j > n || t.k > n) {
      throw DimensionMismatch("from_terms: index out of range");
    }
    L.set(t.i - 1, t.j - 1, t.k - 1, L.c(t.i - 1, t.j - 1, t.k - 1) + t.c);
  }
  return L;
}

namespace {

ParamSpec alpha(bool nonzero, std::string note = {}) { return {"alpha", nonzero, 2, std::move(note)}; }

const std::string kSquareNote = "alpha is meant up to squares; non-squareness is not enforced";

Entry fixed(std::string name, std::string description, std::size_t n,
            std::function<std::vector<Term>(const FieldDesc&)> terms,
            std::vector<std::string> labels = {}) {
  return {std::move(name), std::move(description), {},
          [n, terms, labels](const FieldDesc& F, const Params&) {
            Algebra L = from_terms(F, n, terms(F));
            if (!labels.empty()) L.set_labels(labels);
            return L;
          }};
}

Entry with_alpha(std::string name, std::string description, ParamSpec spec,
                 std::function<std::vector<Term>(const FieldDesc&, const Scalar&)> terms) {
  return {std::move(name), std::move(description), {std::move(spec)},
          [terms](const FieldDesc& F, const Params& p) { return from_terms(F, 3, terms(F, p.at("alpha"))); }};
}

std::vector<Entry> make_entries() {
  using S = Scalar;
  std::vector<Entry> out;
  out.push_back(fixed("L_A", "2-dim nilpotent symmetric: [e2,e2]=e1", 2,
                      [](const FieldDesc& F) { return std::vector<Term>{{2, 2, 1, S(F, 1)}}; }));
  out.push_back(fixed("L_B", "2-dim solvable: [e1,e2]=[e2,e2]=e1", 2, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 2, 1, S(F, 1)}, {2, 2, 1, S(F, 1)}};
  }));
  out.push_back(fixed("L_1", "[e1,e3]=-2e1, [e2,e2]=e1, [e2,e3]=-[e3,e2]=-e2", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 3, 1, S(F, -2)}, {2, 2, 1, S(F, 1)}, {2, 3, 2, S(F, -1)}, {3, 2, 2, S(F, 1)}};
  }));
  out.push_back(with_alpha("L_2", "[e1,e3]=alpha e1, [e2,e3]=-[e3,e2]=-e2", alpha(true),
                           [](const FieldDesc& F, const S& a) {
                             return std::vector<Term>{{1, 3, 1, a}, {2, 3, 2, S(F, -1)}, {3, 2, 2, S(F, 1)}};
                           }));
  out.push_back(fixed("L_3", "[e2,e3]=-[e3,e2]=-e2, [e3,e3]=e1", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{2, 3, 2, S(F, -1)}, {3, 2, 2, S(F, 1)}, {3, 3, 1, S(F, 1)}};
  }));
  out.push_back(fixed("L_4", "[e2,e2]=[e3,e3]=e1", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{2, 2, 1, S(F, 1)}, {3, 3, 1, S(F, 1)}};
  }));
  out.push_back(with_alpha("L_5", "[e2,e2]=e1, [e3,e3]=alpha e1", alpha(false, kSquareNote),
                           [](const FieldDesc& F, const S& a) {
                             return std::vector<Term>{{2, 2, 1, S(F, 1)}, {3, 3, 1, a}};
                           }));
  out.push_back(with_alpha("L_6", "[e2,e2]=[e2,e3]=e1, [e3,e3]=alpha e1", alpha(true),
                           [](const FieldDesc& F, const S& a) {
                             return std::vector<Term>{{2, 2, 1, S(F, 1)}, {2, 3, 1, S(F, 1)}, {3, 3, 1, a}};
                           }));
  out.push_back(fixed("L_7", "[e2,e3]=e1", 3,
                      [](const FieldDesc& F) { return std::vector<Term>{{2, 3, 1, S(F, 1)}}; }));
  out.push_back(fixed("L_8", "[e1,e3]=e2, [e2,e3]=e1", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 3, 2, S(F, 1)}, {2, 3, 1, S(F, 1)}};
  }));
  out.push_back(with_alpha("L_9", "[e1,e3]=e2, [e2,e3]=alpha e1", alpha(false, kSquareNote),
                           [](const FieldDesc& F, const S& a) {
                             return std::vector<Term>{{1, 3, 2, S(F, 1)}, {2, 3, 1, a}};
                           }));
  out.push_back(with_alpha("L_10", "[e1,e3]=e2, [e2,e3]=alpha e1+e2", alpha(true),
                           [](const FieldDesc& F, const S& a) {
                             return std::vector<Term>{{1, 3, 2, S(F, 1)}, {2, 3, 1, a}, {2, 3, 2, S(F, 1)}};
                           }));
  out.push_back(fixed("L_11", "[e1,e3]=e1, [e2,e3]=e2", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 3, 1, S(F, 1)}, {2, 3, 2, S(F, 1)}};
  }));
  out.push_back(fixed("L_12", "[e1,e3]=e2, [e3,e3]=e1", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 3, 2, S(F, 1)}, {3, 3, 1, S(F, 1)}};
  }));
  out.push_back(fixed("L_13", "[e1,e3]=e1+e2, [e3,e3]=e1", 3, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 3, 1, S(F, 1)}, {1, 3, 2, S(F, 1)}, {3, 3, 1, S(F, 1)}};
  }));
  out.push_back(fixed(
      "d1", "4-dim 2-nilpotent: [e1,e3]=[e2,e3]=-[e3,e1]=[e3,e2]=z", 4,
      [](const FieldDesc& F) {
        return std::vector<Term>{{1, 3, 4, S(F, 1)}, {2, 3, 4, S(F, 1)}, {3, 1, 4, S(F, -1)}, {3, 2, 4, S(F, 1)}};
      },
      {"e1", "e2", "e3", "z"}));
  out.push_back(fixed(
      "R5", "4-dim nilpotent: [x1,x1]=x3, [x1,x2]=[x3,x1]=x4", 4,
      [](const FieldDesc& F) {
        return std::vector<Term>{{1, 1, 3, S(F, 1)}, {1, 2, 4, S(F, 1)}, {3, 1, 4, S(F, 1)}};
      },
      {"x1", "x2", "x3", "x4"}));
  out.push_back(fixed(
      "L39", "4-dim solvable: [f1,f4]=-[f4,f1]=f2, [f3,f4]=f3, [f4,f4]=f2", 4,
      [](const FieldDesc& F) {
        return std::vector<Term>{{1, 4, 2, S(F, 1)}, {4, 1, 2, S(F, -1)}, {3, 4, 3, S(F, 1)}, {4, 4, 2, S(F, 1)}};
      },
      {"f1", "f2", "f3", "f4"}));
  out.push_back(fixed("example_3_3", "3-dim symmetric: [e3,e2]=-[e2,e3]=e1, [e3,e3]=-e1", 3,
                      [](const FieldDesc& F) {
                        return std::vector<Term>{{3, 2, 1, S(F, 1)}, {2, 3, 1, S(F, -1)}, {3, 3, 1, S(F, -1)}};
                      }));
  out.push_back(fixed("lie2", "2-dim non-abelian Lie: [e1,e2]=-[e2,e1]=e1", 2, [](const FieldDesc& F) {
    return std::vector<Term>{{1, 2, 1, S(F, 1)}, {2, 1, 1, S(F, -1)}};
  }));
  out.push_back(fixed(
      "sl2", "sl2 in the basis h,e,f: [h,e]=2e, [h,f]=-2f, [e,f]=h", 3,
      [](const FieldDesc& F) {
        return std::vector<Term>{{1, 2, 2, S(F, 2)},  {2, 1, 2, S(F, -2)}, {1, 3, 3, S(F, -2)},
                                 {3, 1, 3, S(F, 2)},  {2, 3, 1, S(F, 1)},  {3, 2, 1, S(F, -1)}};
      },
      {"h", "e", "f"}));
  return out;
}

std::string normalize(std::string name) {
  std::string s;
  for (char c : name) {
    if (c != '_') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = make_entries();
  return all;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const Entry& find(const std::string& name) {
  const std::string key = normalize(name);
  for (const auto& e : entries()) {
    if (normalize(e.name) == key) return e;
  }
  throw UnknownEntry("unknown catalog entry \"" + name + "\"");
}

Algebra get(const std::string& name, const Params& params, const FieldDesc& field) {
  const Entry& e = find(name);
  Params resolved;
  for (const auto& [key, value] : params) {
    const std::string k = key == "α" ? "alpha" : key;
    const bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw UnknownEntry(e.name + " has no parameter \"" + key + "\"");
    if (!(value.field() == field)) throw FieldMismatch("parameter " + key + " is not over " + field.name());
    resolved[k] = value;
  }
  for (const auto& p : e.params) {
    if (!resolved.contains(p.name)) resolved[p.name] = Scalar(field, p.default_value);
    if (p.nonzero && resolved.at(p.name).is_zero()) {
      throw ConstraintViolation(e.name + " requires " + p.name + " != 0");
    }
  }
  return e.build(field, resolved);
}

Algebra get(const std::string& name, const std::map<std::string, std::string>& params, const FieldDesc& field) {
  Params parsed;
  for (const auto& [k, v] : params) parsed[k] = Scalar::parse(field, v);
  return get(name, parsed, field);
}

Algebra get(const std::string& name, const FieldDesc& field) { return get(name, Params{}, field); }

Algebra get(const std::string& name, const Scalar& alpha) {
  return get(name, Params{{"alpha", alpha}}, alpha.field());
}

}  // namespace leib::catalog
