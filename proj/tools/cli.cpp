#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "solvalg/algebra.hpp"
#include "solvalg/algebra_file.hpp"
#include "solvalg/errors.hpp"
#include "solvalg/transform.hpp"
#include "solvalg/verify.hpp"

namespace solvalg::cli {

namespace {

// Raised for bad invocations that CLI11 cannot see (missing weights, wrong
// argument counts for a command).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> args;
  unsigned box = 2;
  std::uint64_t bound = 16;
  std::uint64_t budget = kDefaultStepBudget;
  std::uint64_t seed = 1;
  std::string mode = "graded";
  unsigned samples = 100;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Session {
  AlgebraFile file;
  const Options& opt;
  std::ostream& out;

  const AlgebraPresentation& p() const { return file.presentation; }

  const std::string& arg(std::size_t k, const char* what) const {
    if (opt.args.size() <= k) throw UsageError(std::string("missing argument: ") + what);
    return opt.args[k];
  }
  void expect_args(std::size_t n) const {
    if (opt.args.size() > n) throw UsageError("unexpected argument '" + opt.args[n] + "'");
  }
  const DegreeFunction& degree() const {
    if (!file.degree) throw UsageError("this command needs weights on the gens line");
    return *file.degree;
  }
  MonomialOrdering graded_ordering() const { return graded_ordering_for(file.ordering, degree()); }
  SolvableAlgebra algebra() const { return SolvableAlgebra(p(), file.ordering, opt.budget); }
  Polynomial poly(std::size_t k, const char* what, const AlgebraPresentation& over) const {
    return parse_poly(arg(k, what), over);
  }
  std::string show(const Polynomial& f) const { return format_poly(f, p().names(), file.ordering); }
  std::string pair_name(std::size_t j, std::size_t i) const { return p().name(j) + "*" + p().name(i); }
};

int cmd_solvcheck(Session& s) {
  s.expect_args(1);
  const SolvabilityReport r = check_solvable(s.p(), s.file.ordering);
  if (r.pass) {
    s.out << "PASS\n";
    return 0;
  }
  const auto& v = *r.violation;
  if (s.p().relation(v.j, v.i).lambda.is_zero()) {
    s.out << "FAIL: " << s.pair_name(v.j, v.i) << ": zero coefficient on the swapped pair\n";
  } else {
    Monomial pair(s.p().nvars());
    ++pair[v.i];
    ++pair[v.j];
    s.out << "FAIL: " << s.pair_name(v.j, v.i) << ": leading tail term "
          << format_monomial(v.leading, s.p().names()) << " is not below "
          << format_monomial(pair, s.p().names()) << "\n";
  }
  return 1;
}

int cmd_confluence(Session& s) {
  s.expect_args(1);
  const ConfluenceReport r = check_pbw_confluence(s.p(), s.file.ordering, s.opt.budget);
  if (r.pass()) {
    s.out << "PASS (" << r.triples_checked << (r.triples_checked == 1 ? " triple" : " triples")
          << ")\n";
    return 0;
  }
  const auto [k, j, i] = *r.triple;
  const std::string word = s.p().name(k) + "*" + s.p().name(j) + "*" + s.p().name(i);
  if (r.status == ConfluenceReport::Status::BudgetExceeded) {
    s.out << "BUDGET EXCEEDED at " << word << " (" << s.opt.budget << " steps)\n";
    return 1;
  }
  s.out << "FAIL at " << word << "\n";
  s.out << "  (" << s.pair_name(k, j) << ")*" << s.p().name(i) << " = " << s.show(*r.left) << "\n";
  s.out << "  " << s.p().name(k) << "*(" << s.pair_name(j, i) << ") = " << s.show(*r.right) << "\n";
  return 1;
}

void print_type(Session& s, const TypeReport& r) {
  s.out << to_string(r.verdict) << "\n";
  for (const auto& w : r.witnesses) {
    s.out << "  " << s.pair_name(w.j, w.i) << ": " << format_monomial(w.term, s.p().names())
          << " has degree " << w.degree << ", required " << w.required << "\n";
  }
}

int cmd_gradecheck(Session& s) {
  s.expect_args(1);
  const TypeReport r = check_graded_type(s.p(), s.degree());
  print_type(s, r);
  return r.verdict == TypeReport::Verdict::Graded ? 0 : 1;
}

int cmd_filtcheck(Session& s) {
  s.expect_args(1);
  const TypeReport r = check_filtered_type(s.p(), s.degree());
  print_type(s, r);
  return r.verdict == TypeReport::Verdict::Neither ? 1 : 0;
}

int cmd_findweights(Session& s) {
  s.expect_args(1);
  WeightMode mode = WeightMode::Graded;
  if (s.opt.mode == "filtered") {
    mode = WeightMode::Filtered;
  } else if (s.opt.mode != "graded") {
    throw UsageError("--mode must be graded or filtered");
  }
  const auto w = find_weights(s.p(), mode, s.opt.bound);
  if (!w) {
    s.out << "none\n";
    return 1;
  }
  s.out << "gens";
  for (std::size_t i = 0; i < s.p().nvars(); ++i) s.out << " " << s.p().name(i) << ":" << w->weight(i);
  s.out << "\n";
  return 0;
}

int cmd_degreelaws(Session& s) {
  s.expect_args(1);
  const DegreeLawReport r = verify_degree_laws(s.algebra(), s.degree(), s.opt.box);
  if (r.pass) {
    s.out << "PASS\n";
    return 0;
  }
  s.out << "FAIL (" << r.law << "):";
  for (const auto& m : r.witness) s.out << " " << format_monomial(m, s.p().names());
  s.out << "\n  " << r.detail << "\n";
  return 1;
}

int cmd_mul(Session& s) {
  s.expect_args(3);
  const Polynomial f = s.poly(1, "f", s.p());
  const Polynomial g = s.poly(2, "g", s.p());
  s.out << s.show(s.algebra().mul(f, g)) << "\n";
  return 0;
}

int cmd_lm(Session& s) {
  s.expect_args(2);
  s.out << format_monomial(leading_monomial(s.file.ordering, s.poly(1, "f", s.p())), s.p().names())
        << "\n";
  return 0;
}

int cmd_lh(Session& s) {
  s.expect_args(2);
  s.out << s.show(leading_homogeneous(s.degree(), s.poly(1, "f", s.p()))) << "\n";
  return 0;
}

int cmd_deg(Session& s) {
  s.expect_args(2);
  s.out << deg_poly(s.degree(), s.poly(1, "f", s.p())) << "\n";
  return 0;
}

int cmd_print(Session& s) {
  s.expect_args(1);
  s.out << format_algebra_file(s.file);
  return 0;
}

int cmd_gr(Session& s) {
  s.expect_args(1);
  const auto g = build_assoc_graded(s.p(), s.degree(), s.graded_ordering());
  s.out << format_algebra_file({g.presentation, g.ordering, g.degree});
  return 0;
}

int cmd_rees(Session& s) {
  s.expect_args(1);
  const auto r = build_rees(s.p(), s.degree(), s.graded_ordering());
  s.out << format_algebra_file({r.presentation, r.ordering, r.degree});
  return 0;
}

int cmd_sigma(Session& s) {
  s.expect_args(2);
  const auto g = build_assoc_graded(s.p(), s.degree(), s.graded_ordering());
  s.out << format_poly(sigma(s.poly(1, "f", s.p()), s.degree()), g.presentation.names(), g.ordering)
        << "\n";
  return 0;
}

int cmd_homog(Session& s) {
  s.expect_args(2);
  const auto r = build_rees(s.p(), s.degree(), s.graded_ordering());
  s.out << format_poly(homogenize(s.poly(1, "f", s.p()), s.degree()), r.presentation.names(),
                       r.ordering)
        << "\n";
  return 0;
}

int cmd_homog_at(Session& s) {
  s.expect_args(3);
  const auto r = build_rees(s.p(), s.degree(), s.graded_ordering());
  const std::string& level = s.arg(2, "level");
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(level, &used);
    if (used != level.size() || level.front() == '-') throw std::invalid_argument(level);
  } catch (const std::exception&) {
    throw UsageError("level must be a nonnegative integer, got '" + level + "'");
  }
  s.out << format_poly(homogenize_to_level(s.poly(1, "f", s.p()), s.degree(), p),
                       r.presentation.names(), r.ordering)
        << "\n";
  return 0;
}

int cmd_dehomog(Session& s) {
  s.expect_args(2);
  const auto r = build_rees(s.p(), s.degree(), s.graded_ordering());
  s.out << s.show(dehomogenize(s.poly(1, "h", r.presentation))) << "\n";
  return 0;
}

int cmd_modz(Session& s) {
  s.expect_args(2);
  const auto r = build_rees(s.p(), s.degree(), s.graded_ordering());
  const auto g = build_assoc_graded(s.p(), s.degree(), s.graded_ordering());
  s.out << format_poly(project_mod_Z(s.poly(1, "h", r.presentation)), g.presentation.names(),
                       g.ordering)
        << "\n";
  return 0;
}

Polynomial random_poly(const AlgebraPresentation& p, unsigned box, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<unsigned> exp(0, box);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial f(p.nvars(), p.field());
  while (f.is_zero()) {
    const int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
      Monomial m(p.nvars());
      for (std::size_t i = 0; i < p.nvars(); ++i) m[i] = exp(rng);
      f.add_term(m, Scalar(p.field(), coeff(rng)));
    }
  }
  return f;
}

int cmd_lemma44(Session& s) {
  s.expect_args(2);
  const MonomialOrdering ord = s.graded_ordering();
  std::vector<Polynomial> fs;
  if (s.opt.args.size() > 1) {
    fs.push_back(s.poly(1, "f", s.p()));
  } else {
    std::mt19937_64 rng(s.opt.seed);
    for (unsigned k = 0; k < s.opt.samples; ++k) fs.push_back(random_poly(s.p(), s.opt.box, rng));
  }
  for (const auto& f : fs) {
    if (f.is_zero()) throw UsageError("lemma44 needs a nonzero polynomial");
    const Lemma44Report r = lemma44_check(s.p(), s.degree(), ord, f);
    if (fs.size() == 1 || !r.pass) {
      s.out << (r.pass ? "PASS" : "FAIL") << " f = " << format_poly(f, s.p().names(), ord) << "\n";
      for (const auto& c : r.checks) {
        s.out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
    }
    if (!r.pass) return 1;
  }
  if (fs.size() > 1) s.out << "PASS (" << fs.size() << " samples)\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solvable polynomial algebras: checks, products and transforms", "solvalg"};
  app.require_subcommand(1);
  Options opt;

  using Handler = std::function<int(Session&)>;
  std::map<CLI::App*, Handler> handlers;
  auto add = [&](const std::string& name, const std::string& help, const std::string& usage,
                 Handler h) {
    CLI::App* sub = app.add_subcommand(name, help + "\n  usage: solvalg " + name + " " + usage);
    sub->add_option("args", opt.args, "algebra file, then expressions")->required();
    sub->add_option("--box", opt.box, "exponent bound for exhaustive checks and samples");
    sub->add_option("--bound", opt.bound, "largest weight tried by findweights");
    sub->add_option("--budget", opt.budget, "rewrite step budget");
    sub->add_option("--seed", opt.seed, "random seed for sampled checks");
    handlers[sub] = std::move(h);
    return sub;
  };
  add("solvcheck", "check lambda != 0 and LM(tail) below the swapped pair", "FILE", cmd_solvcheck);
  add("confluence", "check overlap confluence of every generator triple", "FILE", cmd_confluence);
  add("gradecheck", "classify the presentation against its weights (exit 0 only if Graded)", "FILE",
      cmd_gradecheck);
  add("filtcheck", "classify the presentation against its weights (exit 1 on Neither)", "FILE",
      cmd_filtcheck);
  add("findweights", "search weights making the presentation graded or filtered", "FILE",
      cmd_findweights)
      ->add_option("--mode", opt.mode, "graded or filtered")
      ->check(CLI::IsMember({"graded", "filtered"}));
  add("degreelaws", "exhaustive degree-law check over the --box exponent box", "FILE",
      cmd_degreelaws);
  add("mul", "product in PBW normal form", "FILE F G", cmd_mul);
  add("lm", "leading monomial", "FILE F", cmd_lm);
  add("lh", "leading homogeneous part", "FILE F", cmd_lh);
  add("deg", "degree", "FILE F", cmd_deg);
  add("sigma", "principal symbol in the associated graded algebra", "FILE F", cmd_sigma);
  add("homog", "homogenization in the Rees algebra", "FILE F", cmd_homog);
  add("homog-at", "homogenization at a level P >= deg F", "FILE F P", cmd_homog_at);
  add("dehomog", "set Z = 1 in a Rees algebra element", "FILE H", cmd_dehomog);
  add("modz", "reduce a Rees algebra element modulo Z", "FILE H", cmd_modz);
  add("print", "reprint the file in canonical form", "FILE", cmd_print);
  add("gr", "print the associated graded algebra as an algebra file", "FILE", cmd_gr);
  add("rees", "print the Rees algebra as an algebra file", "FILE", cmd_rees);
  add("lemma44", "compare degree and leading data of f with sigma(f) and its homogenization",
      "FILE [F]", cmd_lemma44)
      ->add_option("--samples", opt.samples, "random polynomials tried when F is omitted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "solvalg: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    Session s{parse_algebra_file(read_file(opt.args.front())), opt, out};
    return handlers.at(chosen)(s);
  } catch (const ParseError& e) {
    err << "solvalg: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "solvalg: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    err << "solvalg: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace solvalg::cli
