// Command-line surface over the pentagon library: verify, construct,
// enumerate, classify, decompose, factorize, props. Exit codes: 0 for
// success / true verdicts, 1 for false verdicts (witness printed), 2 for
// any error, with the diagnostic category prefixed on stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/group.hpp"
#include "pentagon/group_solution.hpp"
#include "pentagon/io.hpp"
#include "pentagon/pairmap.hpp"

namespace {

using namespace pentagon;

io::Format parse_format(const std::string& name) {
  return name == "structured" ? io::Format::structured : io::Format::text;
}

// Comma/space separated integer list, e.g. "0,3,0,3" or "0 3 0 3".
std::vector<element_t> parse_list(const std::string& text) {
  std::string cooked = text;
  for (char& c : cooked)
    if (c == ',') c = ' ';
  std::istringstream in(cooked);
  std::vector<element_t> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument{token};
    } catch (const std::exception&) {
      fail(errc::precondition, "expected an integer list, got '" + text + "'");
    }
  }
  return out;
}

Group load_group(const std::string& path) {
  return group_from_magma(io::read_magma_file(path));
}

/// Output sink: stdout unless -o was given.
struct Sink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) fail(errc::io, "cannot open file: " + path);
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

std::string set_notation(const std::vector<element_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

void write_list(std::ostream& out, const std::vector<element_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
}

void write_flags(std::ostream& out, const SolutionProfile& p) {
  out << "solution=" << p.is_solution << " reversed=" << p.is_reversed
      << " invertible=" << p.is_invertible << " commutative=" << p.is_commutative
      << " cocommutative=" << p.is_cocommutative;
}

void write_decomposition(std::ostream& out, io::Format format,
                         const GroupSolution& gs, const CosetDatum& datum) {
  auto t1 = theta_one(gs);
  if (format == io::Format::structured) {
    out << "group " << (gs.group.magma.name.empty() ? "?" : gs.group.magma.name)
        << "\n";
    out << "theta_1 ";
    write_list(out, t1);
    out << "\nkernel ";
    write_list(out, datum.K.elements);
    out << "\nreps ";
    write_list(out, datum.R);
    out << "\n";
    return;
  }
  if (!gs.group.magma.name.empty()) out << "group: " << gs.group.magma.name << "\n";
  out << "theta_1: ";
  write_list(out, t1);
  out << "\nkernel: " << set_notation(datum.K.elements)
      << "\nR: " << set_notation(datum.R) << "\n";
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& input, const std::string& group_path,
               io::Format format, Sink& sink) {
  PairMap s = io::read_pairmap_file(input);
  Check direct = is_solution_direct(s);
  SolutionProfile p = profile(s);
  std::ostream& out = sink.out();

  if (format == io::Format::structured) {
    out << "file " << input << "\n" << "n " << s.n << "\n" << "profile ";
    write_flags(out, p);
    out << "\n";
    if (!direct.ok) {
      const Triple& w = *direct.witness;
      out << "witness " << w.x << " " << w.y << " " << w.z << "\n";
      ConditionCheck cc = is_solution_conditions(s);
      out << "condition " << cc.condition << "\n";
    }
  } else {
    out << "file: " << input << "\n"
        << "solution: " << (direct.ok ? "true" : "false") << "\n";
    if (!direct.ok) {
      const Triple& w = *direct.witness;
      out << "witness: (" << w.x << "," << w.y << "," << w.z << ")\n";
      ConditionCheck cc = is_solution_conditions(s);
      const Triple& cw = *cc.witness;
      out << "condition: " << cc.condition << " fails at (" << cw.x << ","
          << cw.y << "," << cw.z << ")\n";
    }
    out << "reversed: " << (p.is_reversed ? "true" : "false") << "\n"
        << "invertible: " << (p.is_invertible ? "true" : "false") << "\n"
        << "commutative: " << (p.is_commutative ? "true" : "false") << "\n"
        << "cocommutative: " << (p.is_cocommutative ? "true" : "false") << "\n";
  }

  if (!group_path.empty() && direct.ok) {
    Group g = load_group(group_path);
    GroupSolution gs = theta_from_pairmap(s, g);
    write_decomposition(sink.out(), format, gs, decompose(gs));
  }
  return direct.ok ? 0 : 1;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  std::string group_path;
  std::string map, alpha, beta, subgroup, reps, a, b;
  int n = 0;
  int degree = 3;
  int value = -1;
};

Factorization lookup_factorization(const Group& g, const std::vector<element_t>& a,
                                   const std::vector<element_t>& b) {
  Subgroup A = subgroup_from_elements(g, a);
  Subgroup B = subgroup_from_elements(g, b);
  for (const Factorization& f : exact_factorizations(g))
    if (f.A.elements == A.elements && f.B.elements == B.elements) return f;
  fail(errc::precondition, "not an exact factorization: A=" +
                               set_notation(A.elements) + " B=" + set_notation(B.elements));
}

int run_construct(const ConstructArgs& args, Sink& sink) {
  auto need = [&](const std::string& value, const char* flag) -> const std::string& {
    if (value.empty())
      fail(errc::precondition,
           "construction '" + args.name + "' requires " + flag);
    return value;
  };
  auto group = [&]() { return load_group(need(args.group_path, "--group")); };

  PairMap s;
  if (args.name == "kt-s") {
    s = kac_takesaki_s(group());
  } else if (args.name == "kt-t") {
    s = kac_takesaki_t(group());
  } else if (args.name == "endo") {
    Magma m = io::read_magma_file(need(args.group_path, "--group"));
    s = endo_solution(m, parse_list(need(args.map, "--map")));
  } else if (args.name == "constant") {
    Magma m = io::read_magma_file(need(args.group_path, "--group"));
    if (args.value < 0) fail(errc::precondition, "construction 'constant' requires --value");
    s = constant_solution(m, args.value);
  } else if (args.name == "militaru") {
    if (args.n <= 0) fail(errc::precondition, "construction 'militaru' requires --n");
    s = militaru(args.n, parse_list(need(args.alpha, "--alpha")),
                 parse_list(need(args.beta, "--beta")));
  } else if (args.name == "zakrzewski") {
    Group g = group();
    s = zakrzewski(g, lookup_factorization(g, parse_list(need(args.a, "--a")),
                                           parse_list(need(args.b, "--b"))));
  } else if (args.name == "baaj-skandalis") {
    Group g = group();
    s = baaj_skandalis(g, lookup_factorization(g, parse_list(need(args.a, "--a")),
                                               parse_list(need(args.b, "--b"))));
  } else if (args.name == "coset") {
    Group g = group();
    Subgroup K = subgroup_from_elements(g, parse_list(need(args.subgroup, "--subgroup")));
    s = coset_solution(g, K, parse_list(need(args.reps, "--reps"))).pairmap();
  } else if (args.name == "sign") {
    s = sign_solution(args.degree);
  } else {
    fail(errc::precondition, "unknown construction: " + args.name);
  }

  io::write_pairmap(sink.out(), s);
  return 0;
}

// ---- enumerate / classify --------------------------------------------------

EnumerationReport enumerate_by_method(const Group& g, const std::string& method,
                                      std::uint64_t budget, int workers) {
  if (method == "raw") return enumerate_with_dot(g.magma, budget);
  if (method == "theta") return enumerate_on_group(g, budget, workers);
  if (method == "theorem") return enumerate_by_theorem(g);
  if (method == "both") {
    EnumerationReport scan = enumerate_on_group(g, budget, workers);
    EnumerationReport thm = enumerate_by_theorem(g);
    if (scan.solutions != thm.solutions)
      fail(errc::internal, "theta-scan and theorem enumeration disagree on " +
                               scan.carrier);
    scan.method = "both";
    return scan;
  }
  fail(errc::precondition, "unknown method: " + method);
}

int run_enumerate(const std::string& group_path, int n, const std::string& method,
                  bool do_classify, std::uint64_t budget, int workers,
                  std::uint64_t seed, io::Format format, Sink& sink) {
  EnumerationReport report;
  if (!group_path.empty()) {
    report = enumerate_by_method(load_group(group_path), method, budget, workers);
  } else if (n > 0) {
    if (method != "raw")
      fail(errc::precondition, "without --group only --method raw is available");
    report = enumerate_raw(n, budget);
  } else {
    fail(errc::precondition, "enumerate requires --group or --n");
  }
  if (do_classify) report = classify(std::move(report), budget, seed);
  io::write_report(sink.out(), report, format);
  if (report.method == "both") {
    if (format == io::Format::structured)
      sink.out() << "agreement 1\n";
    else
      sink.out() << "agreement: theta-scan == theorem\n";
  }
  return 0;
}

int run_classify(const std::vector<std::string>& files, const std::string& group_path,
                 const std::string& method, std::uint64_t budget, int workers,
                 std::uint64_t seed, io::Format format, Sink& sink) {
  EnumerationReport report;
  if (!files.empty()) {
    report.carrier = "files";
    report.method = "given";
    for (const std::string& path : files) {
      PairMap s = io::read_pairmap_file(path);
      if (!report.solutions.empty() && s.n != report.solutions.front().n)
        fail(errc::precondition, "pair maps live on different carriers: " + path);
      report.profiles.push_back(profile(s));
      report.solutions.push_back(std::move(s));
    }
    report.classes = classify_solutions(report.solutions, budget, seed);
  } else if (!group_path.empty()) {
    report = enumerate_by_method(load_group(group_path), method, budget, workers);
    report = classify(std::move(report), budget, seed);
  } else {
    fail(errc::precondition, "classify requires --group or pair map files");
  }
  io::write_report(sink.out(), report, format);
  return 0;
}

// ---- decompose / factorize / props -----------------------------------------

int run_decompose(const std::string& input, const std::string& group_path,
                  io::Format format, Sink& sink) {
  PairMap s = io::read_pairmap_file(input);
  ConditionCheck cc = is_solution_conditions(s);
  std::ostream& out = sink.out();
  if (!cc.ok) {
    const Triple& w = *cc.witness;
    if (format == io::Format::structured)
      out << "file " << input << "\nsolution 0\ncondition " << cc.condition
          << "\nwitness " << w.x << " " << w.y << " " << w.z << "\n";
    else
      out << "file: " << input << "\nsolution: false\ncondition: " << cc.condition
          << " fails at (" << w.x << "," << w.y << "," << w.z << ")\n";
    return 1;
  }

  Group g = group_path.empty()
                ? group_from_magma(Magma{s.n, s.dot_table, s.name})
                : load_group(group_path);
  GroupSolution gs = theta_from_pairmap(s, g);
  if (format == io::Format::structured)
    out << "file " << input << "\nsolution 1\n";
  else
    out << "file: " << input << "\nsolution: true\n";
  write_decomposition(out, format, gs, decompose(gs));
  return 0;
}

int run_factorize(const std::string& group_path, io::Format format, Sink& sink) {
  Group g = load_group(group_path);
  auto fs = exact_factorizations(g);
  std::ostream& out = sink.out();
  if (format == io::Format::structured) {
    out << "group " << (g.magma.name.empty() ? "?" : g.magma.name) << "\n"
        << "count " << fs.size() << "\n";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      out << "factorization " << i << "\na ";
      write_list(out, fs[i].A.elements);
      out << "\nb ";
      write_list(out, fs[i].B.elements);
      out << "\n";
    }
  } else {
    if (!g.magma.name.empty()) out << "group: " << g.magma.name << "\n";
    out << "factorizations: " << fs.size() << "\n";
    for (std::size_t i = 0; i < fs.size(); ++i)
      out << "[" << i << "] A=" << set_notation(fs[i].A.elements)
          << " B=" << set_notation(fs[i].B.elements) << "\n";
  }
  return 0;
}

int run_props(const std::vector<std::string>& files, io::Format format, Sink& sink) {
  std::ostream& out = sink.out();
  if (format == io::Format::structured) out << "count " << files.size() << "\n";
  for (const std::string& path : files) {
    SolutionProfile p = profile(io::read_pairmap_file(path));
    if (format == io::Format::structured) {
      out << "file " << path << "\nprofile ";
      write_flags(out, p);
      out << "\n";
    } else {
      out << path << ": ";
      write_flags(out, p);
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pentagon equation toolkit: solutions s(x,y) = (x.y, x*y) on finite sets"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  std::string group_path;
  std::uint64_t budget = 0;
  auto add_common = [&](CLI::App* sub, bool with_group = true) {
    sub->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("-o,--output", output_path, "Write the report to a file");
    if (with_group) sub->add_option("--group", group_path, "Group table file");
    sub->add_option("--budget", budget, "Scan budget override");
  };

  std::string input;
  CLI::App* verify = app.add_subcommand("verify", "Check the pentagon identity");
  verify->add_option("input", input, "Pair map file")->required();
  add_common(verify);

  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand("construct", "Build a named solution");
  construct->add_option("name", cargs.name,
                        "kt-s | kt-t | endo | constant | militaru | zakrzewski | "
                        "baaj-skandalis | coset | sign")
      ->required();
  construct->add_option("--group", cargs.group_path, "Group or magma table file");
  construct->add_option("--map", cargs.map, "Image row of gamma (endo)");
  construct->add_option("--value", cargs.value, "Idempotent element (constant)");
  construct->add_option("--n", cargs.n, "Carrier size (militaru)");
  construct->add_option("--alpha", cargs.alpha, "Image row of alpha (militaru)");
  construct->add_option("--beta", cargs.beta, "Image row of beta (militaru)");
  construct->add_option("--subgroup", cargs.subgroup, "Elements of K (coset)");
  construct->add_option("--reps", cargs.reps, "Coset representatives (coset)");
  construct->add_option("--a", cargs.a, "Elements of A (zakrzewski, baaj-skandalis)");
  construct->add_option("--b", cargs.b, "Elements of B (zakrzewski, baaj-skandalis)");
  construct->add_option("--degree", cargs.degree, "Symmetric group degree (sign)");
  construct->add_option("-o,--output", output_path, "Write the table to a file");

  int carrier_n = 0;
  std::string method = "theta";
  bool do_classify = false;
  int workers = 1;
  std::uint64_t seed = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List all solutions");
  enumerate->add_option("--n", carrier_n, "Bare carrier size (raw scan)");
  enumerate->add_option("--method", method, "raw | theta | theorem | both")
      ->check(CLI::IsMember({"raw", "theta", "theorem", "both"}));
  enumerate->add_flag("--classify", do_classify, "Attach equivalence classes");
  enumerate->add_option("--workers", workers, "Scan threads");
  enumerate->add_option("--seed", seed, "Classification probe-order seed");
  add_common(enumerate);

  std::vector<std::string> files;
  CLI::App* classify = app.add_subcommand("classify", "Group solutions into classes");
  classify->add_option("files", files, "Pair map files");
  classify->add_option("--method", method, "raw | theta | theorem | both")
      ->check(CLI::IsMember({"raw", "theta", "theorem", "both"}));
  classify->add_option("--workers", workers, "Scan threads");
  classify->add_option("--seed", seed, "Probe-order seed");
  add_common(classify);

  CLI::App* decompose = app.add_subcommand("decompose", "Extract kernel and representatives");
  decompose->add_option("input", input, "Pair map file")->required();
  add_common(decompose);

  CLI::App* factorize = app.add_subcommand("factorize", "List exact factorizations");
  add_common(factorize);

  CLI::App* props = app.add_subcommand("props", "Report profile flags per file");
  props->add_option("files", files, "Pair map files")->required();
  add_common(props, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    io::Format format = parse_format(format_name);
    Sink sink(output_path);
    if (*verify) return run_verify(input, group_path, format, sink);
    if (*construct) return run_construct(cargs, sink);
    if (*enumerate)
      return run_enumerate(group_path, carrier_n, method, do_classify, budget,
                           workers, seed, format, sink);
    if (*classify)
      return run_classify(files, group_path, method, budget, workers, seed,
                          format, sink);
    if (*decompose) return run_decompose(input, group_path, format, sink);
    if (*factorize) {
      if (group_path.empty()) fail(errc::precondition, "factorize requires --group");
      return run_factorize(group_path, format, sink);
    }
    if (*props) return run_props(files, format, sink);
  } catch (const error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
