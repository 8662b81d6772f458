// Command line front end: leibniz <command> ...
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/error.hpp"
#include "leibniz/holomorph.hpp"
#include "leibniz/io.hpp"
#include "leibniz/iso.hpp"
#include "leibniz/reproduce.hpp"

namespace {

using namespace leib;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_flags(std::ostream& os, const IdentityFlags& f) {
  os << "right Leibniz: " << yes_no(f.right_leibniz) << "\n"
     << "left Leibniz:  " << yes_no(f.left_leibniz) << "\n"
     << "symmetric:     " << yes_no(f.symmetric) << "\n"
     << "antisymmetric: " << yes_no(f.antisymmetric) << "\n"
     << "Lie:           " << yes_no(f.lie) << "\n";
}

void print_space(const std::string& name, const OperatorSpace& S) {
  std::cout << name << " (dim " << S.dim() << ")\n";
  for (const auto& m : S.basis()) std::cout << "  " << m.to_string() << "\n";
}

void print_space(const std::string& name, const PairSpace& S) {
  std::cout << name << " (dim " << S.dim() << ")\n";
  for (const auto& p : S.basis()) std::cout << "  (" << p.d.to_string() << ", " << p.D.to_string() << ")\n";
}

int cmd_check(const std::string& file) {
  const auto f = identity_flags(io::load_algebra(file));
  print_flags(std::cout, f);
  return f.right_leibniz ? kOk : kMismatch;
}

int cmd_invariants(const std::string& file) {
  const Fingerprint fp = fingerprint(io::load_algebra(file));
  std::cout << fp.table() << "\n" << fp.json() << "\n";
  return kOk;
}

struct SpaceFlags {
  bool der = false, ader = false, bider = false, lieder = false, inn = false;
};

int cmd_spaces(const std::string& file, SpaceFlags s) {
  const Algebra L = io::load_algebra(file);
  if (!(s.der || s.ader || s.bider || s.lieder || s.inn)) s = {true, true, true, true, true};
  const bool rl = identity_flags(L).right_leibniz;
  if (s.der) print_space("Der", derivation_space(L));
  if (s.ader) print_space("ADer", antiderivation_space(L));
  if (s.bider) print_space("Bider", biderivation_space(L));
  if (s.lieder) {
    if (rl) print_space("Der_Lie", lie_derivation_space(L));
    else std::cout << "Der_Lie: not defined (not right Leibniz)\n";
  }
  if (s.inn) {
    if (rl) print_space("Inn", inner_derivations(L));
    else std::cout << "Inn: not defined (not right Leibniz)\n";
  }
  return kOk;
}

int cmd_holomorph(const std::string& file, const std::string& kind, bool op, const std::string& out) {
  Algebra L = io::load_algebra(file);
  if (op) L = opposite(L);
  HolomorphResult h;
  if (kind == "lie") h = lie_holomorph(L);
  else if (kind == "classical") h = classical_holomorph(L);
  else if (kind == "misra") h = misra_holomorph(L);
  else h = bider_semidirect(L);
  const std::string text = io::emit_algebra(h.algebra);
  // The algebra file goes to stdout unless --out is given; flags go to the
  // other stream so stdout stays a valid file.
  std::ostream& flags_os = out.empty() ? std::cerr : std::cout;
  if (out.empty()) std::cout << text;
  else io::write_file(out, text);
  flags_os << to_string(h.kind) << " holomorph: dim " << h.algebra.dim() << " (base " << h.base_dim
           << ", acting " << h.acting_dim() << ")\n";
  print_flags(flags_os, identity_flags(h.algebra));
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b, const std::string& map, bool search, double seconds) {
  const Algebra L = io::load_algebra(a);
  const Algebra M = io::load_algebra(b);
  if (!map.empty()) {
    const Matrix f = io::load_map(map, L.field());
    if (f.rows() != M.dim() || f.cols() != L.dim()) {
      std::cout << "map is " << f.rows() << "x" << f.cols() << ", expected " << M.dim() << "x" << L.dim() << "\n";
      return kMismatch;
    }
    const HomCheck c = verify_homomorphism(L, M, f);
    if (c.is_iso) {
      std::cout << "isomorphism verified\n";
      return kOk;
    }
    std::cout << (c.is_hom ? "homomorphism, not bijective\n" : "not a homomorphism\n");
    return kMismatch;
  }
  (void)search;
  if (!L.field().is_finite()) {
    const auto diff = fingerprint(L).differences(fingerprint(M));
    if (!diff.empty()) {
      std::cout << "none (fingerprints differ: ";
      for (std::size_t i = 0; i < diff.size(); ++i) std::cout << (i ? ", " : "") << diff[i];
      std::cout << ")\n";
      return kMismatch;
    }
    std::cout << "unknown (field infinite)\n";
    return kMismatch;
  }
  SearchOptions opts;
  if (seconds > 0) {
    opts.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  }
  const SearchResult r = search_isomorphism(L, M, opts);
  switch (r.status) {
    case SearchStatus::Found:
      std::cout << "isomorphism found (" << r.nodes << " nodes)\n" << io::emit_map(*r.witness);
      return kOk;
    case SearchStatus::Exhausted:
      std::cout << "none (exhausted, " << r.nodes << " nodes)\n";
      return kMismatch;
    case SearchStatus::FingerprintDiffers: {
      const auto diff = fingerprint(L).differences(fingerprint(M));
      std::cout << "none (fingerprints differ:";
      for (const auto& d : diff) std::cout << " " << d;
      std::cout << ")\n";
      return kMismatch;
    }
    case SearchStatus::Timeout:
      std::cout << "unknown (timeout after " << r.nodes << " nodes)\n";
      return kMismatch;
  }
  return kMismatch;
}

int cmd_catalog_list() {
  for (const auto& e : catalog::entries()) {
    std::cout << e.name;
    for (const auto& p : e.params) {
      std::cout << " [" << p.name << "=" << p.default_value << (p.nonzero ? ", nonzero" : "") << "]";
    }
    std::cout << "  " << e.description << "\n";
    for (const auto& p : e.params) {
      if (!p.note.empty()) std::cout << "    " << p.name << ": " << p.note << "\n";
    }
  }
  return kOk;
}

int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& params, const std::string& field,
                     std::uint64_t p) {
  const FieldDesc F = field == "Q" ? FieldDesc::rationals() : FieldDesc::prime(p);
  std::map<std::string, std::string> kv;
  for (const auto& s : params) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param", "expected key=value, got " + s);
    kv[s.substr(0, eq)] = s.substr(eq + 1);
  }
  std::cout << io::emit_algebra(catalog::get(name, kv, F));
  return kOk;
}

int cmd_reproduce(const std::string& report) {
  const Report r = reproduce();
  std::cout << r.table();
  if (!report.empty()) io::write_file(report, r.json() + "\n");
  return r.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leibniz algebra toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, map, kind = "lie", out, field = "Q", report, entry;
  std::uint64_t p = 0;
  bool op = false, search = false;
  double seconds = 0;
  SpaceFlags sf;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "Identity flags; exit 0 iff right Leibniz");
  check->add_option("file", file, "Algebra file")->required();

  auto* inv = app.add_subcommand("invariants", "Fingerprint as a table and as JSON");
  inv->add_option("file", file, "Algebra file")->required();

  auto* spaces = app.add_subcommand("spaces", "Canonical bases of derivation spaces (all when no flag)");
  spaces->add_option("file", file, "Algebra file")->required();
  spaces->add_flag("--der", sf.der, "Der");
  spaces->add_flag("--ader", sf.ader, "ADer");
  spaces->add_flag("--bider", sf.bider, "Bider");
  spaces->add_flag("--lieder", sf.lieder, "Der_Lie");
  spaces->add_flag("--inn", sf.inn, "Inn");

  auto* hol = app.add_subcommand("holomorph", "Holomorph or semidirect product");
  hol->add_option("file", file, "Algebra file")->required();
  hol->add_option("--kind", kind, "lie | classical | misra | bider")
      ->check(CLI::IsMember({"lie", "classical", "misra", "bider"}));
  hol->add_flag("--op", op, "Use the opposite algebra");
  hol->add_option("--out", out, "Write the algebra file here");

  auto* iso = app.add_subcommand("iso", "Verify a map or search for an isomorphism");
  iso->add_option("a", file, "Source algebra file")->required();
  iso->add_option("b", file_b, "Target algebra file")->required();
  auto* map_opt = iso->add_option("--map", map, "Map file, columns are images");
  auto* search_opt = iso->add_flag("--search", search, "Search (F_p only)");
  map_opt->excludes(search_opt);
  iso->add_option("--time-limit", seconds, "Search time limit in seconds");

  auto* cat = app.add_subcommand("catalog", "Named algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  auto* cat_emit = cat->add_subcommand("emit", "Write an entry as an algebra file");
  cat_emit->add_option("name", entry, "Entry name")->required();
  cat_emit->add_option("--param", params, "Parameter key=value");
  cat_emit->add_option("--field", field, "Q | Fp")->check(CLI::IsMember({"Q", "Fp"}));
  auto* p_opt = cat_emit->add_option("--p", p, "Characteristic for --field Fp");

  auto* rep = app.add_subcommand("reproduce", "Run the expectations suite");
  rep->add_option("--report", report, "Write the JSON report here");

  try {
    app.parse(argc, argv);
    if (cat_emit->parsed() && field == "Fp" && p_opt->count() == 0) {
      throw CLI::RequiredError("--p is required with --field Fp");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (inv->parsed()) return cmd_invariants(file);
    if (spaces->parsed()) return cmd_spaces(file, sf);
    if (hol->parsed()) return cmd_holomorph(file, kind, op, out);
    if (iso->parsed()) return cmd_iso(file, file_b, map, search, seconds);
    if (cat_list->parsed()) return cmd_catalog_list();
    if (cat_emit->parsed()) return cmd_catalog_emit(entry, params, field, p);
    if (rep->parsed()) return cmd_reproduce(report);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
