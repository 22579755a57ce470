// dmtool: command-line front end for delta-matroid computations.
//
//   check       validate a set-system file and print its flags
//   twistpoly   compute the twist polynomial (fast or definitional route)
//   transform   twist/dual/delete/contract/restrict, emitting canonical text
//   from-matrix expand a symmetric GF(2) matrix into its set system
//   to-matrix   recover the unique matrix of a normal binary delta-matroid
//   classify    shape the intersection graph and predict monomiality
//   verify      exhaustive census over all symmetric matrices up to an order
//
// Exit codes: 0 success, 1 domain failure (not a delta-matroid, not normal
// binary), 2 usage/parse/size errors, 3 verification disagreement.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dm/classify.hpp"
#include "dm/gf2.hpp"
#include "dm/ops.hpp"
#include "dm/set_system.hpp"
#include "dm/twist_poly.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;
constexpr int kDisagreement = 3;

// Domain-level refusals (exit 1), as opposed to parse/usage errors (exit 2).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dm::ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dm::SetSystem load_set_system(const std::string& path) {
  dm::ParsedSetSystem parsed = dm::parse_set_system(read_input(path));
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(parsed.system);
}

dm::DeltaMatroid require_delta_matroid(const dm::SetSystem& s) {
  if (auto w = dm::exchange_violation(s)) {
    throw DomainError("not a delta-matroid; witness " + w->describe(s.ground()));
  }
  return dm::DeltaMatroid::trusted(s);
}

int resolve_element(const dm::GroundSet& g, const std::string& name) {
  if (auto idx = g.index_of(name)) return *idx;
  throw dm::ParseError("unknown element '" + name + "'");
}

std::string flags_text(const dm::DmFlags& f) {
  std::string out;
  if (f.trivial) out += "; trivial";
  if (f.normal) out += "; normal";
  out += f.even ? "; even" : "; odd";
  return out;
}

nlohmann::ordered_json poly_json(const dm::TwistPolynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exp", it->first}, {"coef", it->second}});
  }
  return {{"terms", std::move(terms)}};
}

nlohmann::ordered_json report_json(const dm::VerificationReport& r) {
  nlohmann::ordered_json j{{"n", r.n},
                           {"matrices_checked", r.matrices_checked},
                           {"monomial_count", r.monomial_count}};
  auto counterexamples = nlohmann::ordered_json::array();
  for (const dm::Counterexample& ce : r.counterexamples) {
    counterexamples.push_back({{"matrix", dm::serialize(ce.matrix)},
                               {"predicted", ce.predicted},
                               {"actual", ce.actual},
                               {"polynomial_fast", ce.poly_fast.str()},
                               {"polynomial_naive", ce.poly_naive.str()}});
  }
  j["counterexamples"] = std::move(counterexamples);
  auto failures = nlohmann::ordered_json::array();
  for (const dm::ReportedPropertyFailure& pf : r.property_failures) {
    failures.push_back({{"rule", pf.failure.rule},
                        {"matrix", dm::serialize(pf.matrix)},
                        {"detail", pf.failure.detail}});
  }
  j["property_failures"] = std::move(failures);
  return j;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
};

int cmd_check(const CheckArgs& a) {
  dm::SetSystem s = load_set_system(a.file);
  if (auto w = dm::exchange_violation(s)) {
    std::cout << "delta-matroid: no; witness " << w->describe(s.ground()) << '\n';
    return kDomainFailure;
  }
  std::cout << "delta-matroid: yes" << flags_text(s.flags()) << '\n';
  return kOk;
}

struct TwistPolyArgs {
  std::string file;
  bool naive = false;
  bool json = false;
};

int cmd_twistpoly(const TwistPolyArgs& a) {
  dm::SetSystem s = load_set_system(a.file);
  dm::DeltaMatroid d = require_delta_matroid(s);
  dm::TwistPolynomial p;
  if (a.naive) {
    p = dm::twist_polynomial_naive(d);
  } else {
    if (!d.flags().normal) {
      auto [normalized, witness] = dm::normalize(d);
      std::cerr << "note: input is not normal; computing on the twist by "
                << dm::format_subset(witness, d.ground()) << " (polynomial unchanged)\n";
      d = std::move(normalized);
    }
    p = dm::twist_polynomial_fast(d);
  }
  if (a.json) {
    std::cout << poly_json(p).dump() << '\n';
  } else {
    std::cout << p.str() << '\n';
  }
  return kOk;
}

struct TransformArgs {
  std::string file;
  std::string twist_set, restrict_set, delete_elem, contract_elem;
  bool dualize = false;
};

int cmd_transform(const TransformArgs& a) {
  dm::SetSystem s = load_set_system(a.file);
  dm::DeltaMatroid d = require_delta_matroid(s);
  dm::DeltaMatroid out = [&] {
    if (a.dualize) return dm::dual(d);
    if (!a.twist_set.empty()) return dm::twist(d, dm::parse_subset(a.twist_set, d.ground()));
    if (!a.restrict_set.empty()) {
      return dm::restrict_to(d, dm::parse_subset(a.restrict_set, d.ground()));
    }
    if (!a.delete_elem.empty()) {
      return dm::delete_element(d, resolve_element(d.ground(), a.delete_elem));
    }
    return dm::contract_element(d, resolve_element(d.ground(), a.contract_elem));
  }();
  std::cout << dm::serialize(out.system());
  return kOk;
}

int cmd_from_matrix(const std::string& file) {
  dm::Gf2SymMatrix c = dm::parse_matrix(read_input(file));
  if (c.size() > dm::kMaxLatticeSize) {
    throw dm::ParseError("matrix order exceeds the enumeration cap of " +
                         std::to_string(dm::kMaxLatticeSize));
  }
  std::cout << dm::serialize(dm::delta_matroid_of_matrix(c).system());
  return kOk;
}

int cmd_to_matrix(const std::string& file) {
  dm::SetSystem s = load_set_system(file);
  dm::DeltaMatroid d = require_delta_matroid(s);
  if (!d.flags().normal) {
    throw DomainError("not normal binary: the empty set is not feasible");
  }
  auto c = dm::is_normal_binary(d);
  if (!c) {
    throw DomainError(
        "not normal binary: the reconstructed matrix generates a different family");
  }
  std::cout << dm::serialize(*c);
  return kOk;
}

struct ClassifyArgs {
  std::string file;
  std::string format;  // "", "set", "matrix"
  bool verify = false;
};

dm::Gf2SymMatrix classify_input(const ClassifyArgs& a) {
  std::string format = a.format;
  if (format.empty()) {
    if (a.file.ends_with(".dm")) {
      format = "set";
    } else if (a.file.ends_with(".mat")) {
      format = "matrix";
    } else {
      throw dm::ParseError("cannot tell set system from matrix for '" + a.file +
                           "'; pass --format");
    }
  }
  if (format == "matrix") return dm::parse_matrix(read_input(a.file));

  dm::DeltaMatroid d = require_delta_matroid(load_set_system(a.file));
  if (!d.flags().normal) {
    throw DomainError("not normal binary: the empty set is not feasible");
  }
  auto c = dm::is_normal_binary(d);
  if (!c) {
    throw DomainError(
        "not normal binary: the reconstructed matrix generates a different family");
  }
  return *c;
}

int cmd_classify(const ClassifyArgs& a) {
  dm::Gf2SymMatrix c = classify_input(a);

  std::string shapes;
  bool predicted = true;
  for (const dm::LoopyGraph& comp : dm::connected_components(dm::intersection_graph(c))) {
    dm::ComponentShape s = dm::component_shape(comp);
    if (s.kind == dm::ShapeKind::other) predicted = false;
    if (!shapes.empty()) shapes += ", ";
    shapes += dm::shape_name(s);
  }
  std::cout << "components: [" << shapes << "]; monomial: " << (predicted ? "yes" : "no")
            << '\n';

  if (a.verify) {
    if (c.size() > dm::kMaxLatticeSize) {
      throw dm::ParseError("matrix order exceeds the enumeration cap of " +
                           std::to_string(dm::kMaxLatticeSize));
    }
    dm::CrossCheck cc = dm::cross_check(c);
    const bool agree = cc.predicted == cc.actual;
    std::cout << "polynomial: " << cc.polynomial.str()
              << "; agreement: " << (agree ? "yes" : "no") << '\n';
    if (!agree) return kDisagreement;
  }
  return kOk;
}

struct VerifyArgs {
  int max_n = 0;
  int jobs = 1;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<dm::VerificationReport> reports = dm::run_verify(a.max_n, a.jobs);
  bool all_ok = true;

  if (a.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const dm::VerificationReport& r : reports) {
      all_ok = all_ok && r.ok();
      j.push_back(report_json(r));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (const dm::VerificationReport& r : reports) {
      all_ok = all_ok && r.ok();
      const std::uint64_t bad = r.counterexamples.size() + r.property_failures.size();
      const std::uint64_t ok = r.matrices_checked > bad ? r.matrices_checked - bad : 0;
      std::cout << "n=" << r.n << ": " << ok << "/" << r.matrices_checked << " ok (monomial "
                << r.monomial_count << ")\n";
      for (const dm::Counterexample& ce : r.counterexamples) {
        std::cout << "counterexample:\n"
                  << dm::serialize(ce.matrix) << "predicted: " << (ce.predicted ? "yes" : "no")
                  << "\nactual: " << (ce.actual ? "yes" : "no")
                  << "\npolynomial-fast: " << ce.poly_fast.str()
                  << "\npolynomial-naive: " << ce.poly_naive.str() << '\n';
      }
      for (const dm::ReportedPropertyFailure& pf : r.property_failures) {
        std::cout << "property failure: " << pf.failure.rule << '\n'
                  << dm::serialize(pf.matrix) << "detail: " << pf.failure.detail << '\n';
      }
    }
  }
  return all_ok ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-matroid toolkit"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "validate a set-system file");
  check->add_option("file", check_args.file, "set-system file, or - for stdin")->required();

  TwistPolyArgs tp_args;
  CLI::App* twistpoly = app.add_subcommand("twistpoly", "compute the twist polynomial");
  twistpoly->add_option("file", tp_args.file, "set-system file, or - for stdin")->required();
  bool tp_fast = false;
  CLI::Option* opt_fast =
      twistpoly->add_flag("--fast", tp_fast, "subset-lattice route (default; normal inputs)");
  twistpoly->add_flag("--naive", tp_args.naive, "definitional route over all twists")
      ->excludes(opt_fast);
  twistpoly->add_flag("--json", tp_args.json, "emit JSON instead of text");

  TransformArgs tr_args;
  CLI::App* transform = app.add_subcommand("transform", "apply one operation, print the result");
  transform->add_option("file", tr_args.file, "set-system file, or - for stdin")->required();
  CLI::Option_group* op = transform->add_option_group("operation");
  op->add_option("--twist", tr_args.twist_set, "twist by a set, e.g. '{a,b}'");
  op->add_flag("--dual", tr_args.dualize, "twist by the full ground set");
  op->add_option("--delete", tr_args.delete_elem, "delete one element");
  op->add_option("--contract", tr_args.contract_elem, "contract one element");
  op->add_option("--restrict", tr_args.restrict_set, "restrict to a set, e.g. '{a,b}'");
  op->require_option(1);

  std::string from_matrix_file;
  CLI::App* from_matrix =
      app.add_subcommand("from-matrix", "expand a symmetric GF(2) matrix into its set system");
  from_matrix->add_option("file", from_matrix_file, "matrix file, or - for stdin")->required();

  std::string to_matrix_file;
  CLI::App* to_matrix = app.add_subcommand(
      "to-matrix", "recover the unique matrix of a normal binary delta-matroid");
  to_matrix->add_option("file", to_matrix_file, "set-system file, or - for stdin")->required();

  ClassifyArgs cl_args;
  CLI::App* classify =
      app.add_subcommand("classify", "shape the intersection graph, predict monomiality");
  classify->add_option("file", cl_args.file, ".dm or .mat file, or - with --format")->required();
  classify->add_option("--format", cl_args.format, "input kind: set or matrix")
      ->check(CLI::IsMember({"set", "matrix"}));
  classify->add_flag("--verify", cl_args.verify, "also compute the polynomial and compare");

  VerifyArgs v_args;
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustive census over all symmetric matrices");
  verify->add_option("--max-n", v_args.max_n, "largest matrix order, 1..6")
      ->required()
      ->check(CLI::Range(1, 6));
  verify->add_option("--jobs", v_args.jobs, "worker threads (output is identical for any count)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", v_args.json, "emit JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(check_args);
    if (app.got_subcommand(twistpoly)) return cmd_twistpoly(tp_args);
    if (app.got_subcommand(transform)) return cmd_transform(tr_args);
    if (app.got_subcommand(from_matrix)) return cmd_from_matrix(from_matrix_file);
    if (app.got_subcommand(to_matrix)) return cmd_to_matrix(to_matrix_file);
    if (app.got_subcommand(classify)) return cmd_classify(cl_args);
    if (app.got_subcommand(verify)) return cmd_verify(v_args);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::exception& e) {
    // ParseError, I/O failures, and precondition violations from the library.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
