// Command-line surface: matrix ingestion, invariant reports, pairwise
// comparison, and the one-shot reproduction harness.
//
// Exit codes: 0 success, 1 check failure, 2 input error.  Reports go to
// standard output (deterministic for fixed input and flags); diagnostics
// and timing go to standard error.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "toric/acceptance.hpp"
#include "toric/arithmat.hpp"
#include "toric/catalog.hpp"
#include "toric/cohom.hpp"
#include "toric/covering.hpp"
#include "toric/layers.hpp"
#include "toric/resonance.hpp"

using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- matrix ingestion ----

IntMatrix parse_matrix_text(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return line;
    }
    return std::nullopt;
  };
  auto fail = [&](const std::string& what) -> InputError {
    return InputError(origin + ":" + std::to_string(lineno) + ": " + what);
  };

  auto header = next_data_line();
  if (!header) throw fail("missing 'r n' header");
  std::istringstream hs(*header);
  long r = 0, n = 0;
  std::string extra;
  if (!(hs >> r >> n) || (hs >> extra) || r < 1 || n < 0)
    throw fail("header must be two integers 'r n' with r >= 1, n >= 0");

  IntMatrix m(static_cast<int>(r), static_cast<int>(n));
  for (int i = 0; i < r; ++i) {
    auto row = next_data_line();
    if (!row) throw fail("expected " + std::to_string(r) + " rows, got " + std::to_string(i));
    std::istringstream rs(*row);
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(rs >> tok)) throw fail("row has fewer than " + std::to_string(n) + " entries");
      try {
        m.at(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw fail("'" + tok + "' is not an integer");
      }
    }
    std::string tok;
    if (rs >> tok) throw fail("row has more than " + std::to_string(n) + " entries");
  }
  if (next_data_line()) throw fail("trailing content after the last row");
  return m;
}

IntMatrix parse_matrix_json(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw InputError(origin + ": expected an object with an array field \"rows\"");
  const json& rows = j["rows"];
  if (rows.empty()) throw InputError(origin + ": \"rows\" must be nonempty");
  int r = static_cast<int>(rows.size());
  int n = static_cast<int>(rows[0].size());
  IntMatrix m(r, n);
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw InputError(origin + ": row " + std::to_string(i + 1) + " has inconsistent length");
    for (int j2 = 0; j2 < n; ++j2) {
      if (!rows[i][j2].is_number_integer())
        throw InputError(origin + ": non-integer entry in row " + std::to_string(i + 1));
      m.at(i, j2) = Int(rows[i][j2].get<long>());
    }
  }
  return m;
}

IntMatrix load_matrix(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    if (auto m = named_matrix(arg)) return *m;
    throw InputError("unknown named matrix '" + arg +
                     "' (try @A, @A(n,a), @N, @Nprime, @Nsecond)");
  }
  std::ifstream f(arg);
  if (!f) throw InputError("cannot open '" + arg + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_matrix_json(text, arg);
  std::istringstream in(text);
  return parse_matrix_text(in, arg);
}

// ---- report plumbing ----

std::string matrix_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += m.at(i, j).get_str();
    }
    out += "\n";
  }
  return out;
}

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
    rows.push_back(row);
  }
  return {{"rows", rows}, {"digest", fnv1a_hex(matrix_text(m))}};
}

json report_shell(const std::string& command) {
  return {{"schema", "toric-report/1"}, {"command", command}};
}

void emit(const json& report, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

std::string subset_name(int mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1 << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string module_name(const ZModule& z) {
  std::string s;
  if (z.free_rank > 0) s = "Z^" + std::to_string(z.free_rank);
  for (const Int& d : z.torsion) s += (s.empty() ? "" : " x ") + ("Z/" + d.get_str());
  return s.empty() ? "0" : s;
}

void check_guard(const IntMatrix& m, int max_subsets, bool force) {
  if (m.cols() > max_subsets && !force)
    throw InputError("ground set of size " + std::to_string(m.cols()) + " exceeds --max-subsets " +
                     std::to_string(max_subsets) + "; pass --force to proceed");
}

// ---- commands ----

int cmd_matroid(const std::string& file, int max_subsets, bool force, const std::string& format) {
  IntMatrix m = load_matrix(file);
  check_guard(m, max_subsets, force);
  ArithmeticMatroid am = matroid_from_matrix(m);
  ZMatroid zm = zmatroid_from_matrix(m);
  BivariatePolyZ tutte = arithmetic_tutte(am);
  UniPolyZ poin = poincare_polynomial(am);

  json rep = report_shell("matroid");
  rep["input"] = matrix_json(m);
  json table = json::array();
  std::ostringstream text;
  text << "arithmetic matroid on " << am.n << " elements, rank " << am.rank_full() << "\n";
  text << "subset: rank, multiplicity, module\n";
  for (int mask = 0; mask < (1 << am.n); ++mask) {
    table.push_back({{"subset", subset_name(mask)},
                     {"rank", am.rk[mask]},
                     {"multiplicity", am.mult[mask].get_str()},
                     {"module", module_name(zm.table[mask])}});
    text << "  " << subset_name(mask) << ": " << am.rk[mask] << ", "
         << am.mult[mask].get_str() << ", " << module_name(zm.table[mask]) << "\n";
  }
  rep["results"] = {{"rank_full", am.rank_full()},
                    {"table", table},
                    {"tutte", tutte.to_string()},
                    {"poincare", poin.to_string()}};
  text << "arithmetic Tutte polynomial: " << tutte.to_string() << "\n";
  text << "Poincare polynomial: " << poin.to_string() << "\n";
  emit(rep, text.str(), format);
  return 0;
}

int cmd_layers(const std::string& file, const std::string& dot_path, int max_subsets,
               bool force, const std::string& format) {
  IntMatrix m = load_matrix(file);
  check_guard(m, max_subsets, force);
  LayerPoset p = enumerate_layers(m);

  json rep = report_shell("layers");
  rep["input"] = matrix_json(m);
  rep["results"] = {{"layer_count", static_cast<int>(p.layers.size())},
                    {"rank_profile", p.rank_profile()}};
  std::ostringstream text;
  text << "layers: " << p.layers.size() << "\nrank profile:";
  for (int c : p.rank_profile()) text << " " << c;
  text << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw InputError("cannot write '" + dot_path + "'");
    out << hasse_dot(p);
    rep["results"]["dot"] = dot_path;
    text << "Hasse diagram written to " << dot_path << "\n";
  }
  emit(rep, text.str(), format);
  return 0;
}

int cmd_poset_compare(const std::string& file1, const std::string& file2, int max_subsets,
                      bool force, const std::string& format) {
  IntMatrix m1 = load_matrix(file1);
  IntMatrix m2 = load_matrix(file2);
  check_guard(m1, max_subsets, force);
  check_guard(m2, max_subsets, force);
  LayerPoset p1 = enumerate_layers(m1);
  LayerPoset p2 = enumerate_layers(m2);
  bool iso = poset_isomorphism(p1, p2).has_value();

  json rep = report_shell("poset-compare");
  rep["input"] = {{"first", matrix_json(m1)}, {"second", matrix_json(m2)}};
  rep["results"] = {{"rank_profile_first", p1.rank_profile()},
                    {"rank_profile_second", p2.rank_profile()},
                    {"isomorphic", iso}};
  std::ostringstream text;
  text << "posets " << (iso ? "isomorphic" : "not isomorphic") << "\n";
  if (p1.n_atoms == 4 && p2.n_atoms == 4) {
    PropertyPResult q1 = property_p(m1);
    PropertyPResult q2 = property_p(m2);
    rep["results"]["partition_property_first"] = q1.holds;
    rep["results"]["partition_property_second"] = q2.holds;
    text << "partition property: first " << (q1.holds ? "holds" : "fails") << ", second "
         << (q2.holds ? "holds" : "fails") << "\n";
  }
  emit(rep, text.str(), format);
  return 0;
}

int cmd_cohomology(const std::string& file, const std::string& over, bool quotient_torus,
                   const std::vector<int>& mult_rank, const std::string& format) {
  IntMatrix m = load_matrix(file);
  json rep = report_shell("cohomology");
  rep["input"] = matrix_json(m);
  rep["results"] = {{"coefficients", over}};
  std::ostringstream text;

  if (over == "Z") {
    if (quotient_torus || !mult_rank.empty())
      throw InputError("--quotient-torus and --mult-rank are only supported with --over Q");
    if (!is_totally_unimodular(m))
      throw InputError(
          "integral graded pieces are computed from the unimodular presentation, which "
          "requires a totally unimodular matrix (all multiplicities 1); this input is not");
    json pieces = json::array();
    text << "integral graded pieces:\n";
    for (int d = 0; d <= m.rows(); ++d) {
      ZModule z = integral_graded_unimodular(m, d);
      json tors = json::array();
      for (const Int& t : z.torsion) tors.push_back(t.get_str());
      pieces.push_back({{"degree", d}, {"free_rank", z.free_rank}, {"torsion", tors}});
      text << "  degree " << d << ": " << module_name(z) << "\n";
    }
    rep["results"]["graded_pieces"] = pieces;
  } else {
    GradedAlgebraQ alg = build_rational_presentation(m);
    if (quotient_torus) alg = quotient_by_torus_ideal(alg);
    std::vector<int> dims = alg.graded_dimensions();
    rep["results"]["quotient_torus"] = quotient_torus;
    rep["results"]["graded_dimensions"] = dims;
    text << "graded dimensions" << (quotient_torus ? " (torus quotient)" : "") << ":";
    for (int d : dims) text << " " << d;
    text << "\n";
    if (!mult_rank.empty()) {
      int p = mult_rank[0], q = mult_rank[1];
      if (p < 0 || q < 0 || p + q > m.rows())
        throw InputError("--mult-rank degrees must be nonnegative with p+q <= ambient rank");
      int rank = alg.multiplication_rank(p, q);
      rep["results"]["mult_rank"] = {{"p", p}, {"q", q}, {"rank", rank}};
      text << "multiplication rank " << p << " x " << q << " -> " << p + q << ": " << rank
           << "\n";
    }
  }
  emit(rep, text.str(), format);
  return 0;
}

int cmd_resonance(const std::string& file, const std::vector<long>& integral,
                  const std::string& format) {
  IntMatrix m = load_matrix(file);
  GradedAlgebraQ alg =
      is_totally_unimodular(m) ? build_unimodular_presentation(m) : build_rational_presentation(m);
  std::vector<Plane> planes;
  try {
    planes = resonance_components(alg, m);
  } catch (const std::runtime_error& e) {
    std::cerr << "resonance check failed: " << e.what() << "\n";
    return 1;
  }

  json rep = report_shell("resonance");
  rep["input"] = matrix_json(m);
  std::ostringstream text;
  json jplanes = json::array();
  text << "resonance components: " << planes.size() << " plane(s)\n";
  int idx = 0;
  for (const Plane& p : planes) {
    ++idx;
    json basis = json::array(), pluck = json::array();
    text << "  plane " << idx << ": basis";
    for (int i = 0; i < 2; ++i) {
      json row = json::array();
      text << " [";
      for (int j = 0; j < p.basis.cols(); ++j) {
        row.push_back(p.basis.at(i, j).get_str());
        text << (j ? " " : "") << p.basis.at(i, j).get_str();
      }
      basis.push_back(row);
      text << "]";
    }
    text << ", Pluecker [";
    bool first = true;
    for (const Rat& x : plucker_coordinates(p)) {
      pluck.push_back(x.get_str());
      text << (first ? "" : " ") << x.get_str();
      first = false;
    }
    text << "]\n";
    jplanes.push_back({{"basis", basis}, {"plucker", pluck}});
  }
  rep["results"] = {{"planes", jplanes}};

  if (!integral.empty()) {
    if (!(m == matrix_A()))
      throw InputError("--integral computes covering sublattices for the base arrangement @A");
    CoveringSpec spec{integral[0], integral[1]};
    H1Lattice h = build_h1_lattice(spec);
    json lats = json::array();
    text << "integral sublattices for covering (n,a) = (" << spec.n << "," << spec.a
         << "), basis (w1,w2,w3,alpha,beta):\n";
    for (size_t i = 0; i < h.q.size(); ++i) {
      json basis = json::array();
      text << "  Q" << i + 1 << ":";
      for (int r = 0; r < h.q[i].basis().rows(); ++r) {
        json row = json::array();
        text << " [";
        for (int c2 = 0; c2 < 5; ++c2) {
          row.push_back(h.q[i].basis().at(r, c2).get_si());
          text << (c2 ? " " : "") << h.q[i].basis().at(r, c2).get_str();
        }
        basis.push_back(row);
        text << "]";
      }
      text << "\n";
      lats.push_back({{"name", "Q" + std::to_string(i + 1)}, {"basis", basis}});
    }
    rep["results"]["integral_lattices"] = lats;
  }
  emit(rep, text.str(), format);
  return 0;
}

int cmd_reproduce(bool as_json, bool corrupt, const std::string& format) {
  std::vector<AcceptanceResult> results = run_acceptance_suite(corrupt);
  bool all = true;
  json rep = report_shell("reproduce-paper");
  json items = json::array();
  std::ostringstream text;
  for (const AcceptanceResult& r : results) {
    all = all && r.pass;
    items.push_back(
        {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    char line[512];
    std::snprintf(line, sizeof line, "%s  %2d  %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.detail.c_str());
    text << line;
  }
  rep["results"] = {{"criteria", items}, {"all_pass", all}};
  text << (all ? "all checks passed\n" : "some checks FAILED\n");
  emit(rep, text.str(), as_json ? "json" : format);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of central toric arrangements"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  int max_subsets = kSubsetGuard;
  app.add_option("--max-subsets", max_subsets, "ground-set size guard for 2^n tables");
  bool force = false;
  app.add_flag("--force", force, "proceed past the ground-set size guard");

  std::string file1, file2, dot_path, over = "Q";
  bool quotient_torus = false, as_json = false, corrupt = false;
  std::vector<int> mult_rank;
  std::vector<long> integral;

  CLI::App* matroid = app.add_subcommand("matroid", "rank/multiplicity/module tables");
  matroid->add_option("matrix", file1, "matrix file or @name")->required();

  CLI::App* layers = app.add_subcommand("layers", "poset of layers");
  layers->add_option("matrix", file1, "matrix file or @name")->required();
  layers->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

  CLI::App* compare = app.add_subcommand("poset-compare", "compare two posets of layers");
  compare->add_option("first", file1, "matrix file or @name")->required();
  compare->add_option("second", file2, "matrix file or @name")->required();

  CLI::App* cohom = app.add_subcommand("cohomology", "graded dimensions and ranks");
  cohom->add_option("matrix", file1, "matrix file or @name")->required();
  cohom->add_option("--over", over, "coefficients")->check(CLI::IsMember({"Q", "Z"}));
  cohom->add_flag("--quotient-torus", quotient_torus, "quotient by the character ideal");
  cohom->add_option("--mult-rank", mult_rank, "rank of multiplication degree p x q")
      ->expected(2);

  CLI::App* reson = app.add_subcommand("resonance", "degree-one resonance components");
  reson->add_option("matrix", file1, "matrix file or @name")->required();
  reson->add_option("--integral", integral, "covering parameters n a")->expected(2);

  CLI::App* repro = app.add_subcommand("reproduce-paper", "run all pinned checks");
  repro->add_flag("--json", as_json, "emit the structured report");
  repro->add_flag("--corrupt-golden", corrupt, "self-check mode: flip one pinned value")
      ->group("");  // hidden

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (matroid->parsed()) rc = cmd_matroid(file1, max_subsets, force, format);
    else if (layers->parsed()) rc = cmd_layers(file1, dot_path, max_subsets, force, format);
    else if (compare->parsed()) rc = cmd_poset_compare(file1, file2, max_subsets, force, format);
    else if (cohom->parsed()) rc = cmd_cohomology(file1, over, quotient_torus, mult_rank, format);
    else if (reson->parsed()) rc = cmd_resonance(file1, integral, format);
    else if (repro->parsed()) rc = cmd_reproduce(as_json, corrupt, format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (consider --max-subsets/--force)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed: " << ms << " ms\n";
  return rc;
}
