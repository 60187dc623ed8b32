#include "tropdet/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tropdet/assignment.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/constructors.hpp"
#include "tropdet/enumeration.hpp"
#include "tropdet/errors.hpp"
#include "tropdet/matrix.hpp"
#include "tropdet/structure.hpp"

namespace tropical::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kBudgetEnv = "TROPDET_WORK_BUDGET";

struct Options {
  std::string format = "plain";
  Entry m = 0;
  Entry n = 0;
  std::string objective;
  std::string stat;
  std::string file;
  Entry threshold = 0;
  Entry colors = 0;
  Entry per_face = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<Entry> expected_m;

  bool structured() const { return format == "structured"; }
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::uint64_t work_budget() {
  const char* value = std::getenv(kBudgetEnv);
  if (value == nullptr || *value == '\0') return kDefaultWorkBudget;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0)
    throw Error(std::string(kBudgetEnv) + " must be a positive integer, got '" + value + "'");
  return parsed;
}

json matrix_json(const IntMatrix& a) { return json::parse(serialize(a, Format::Structured)); }

std::string one_based(std::span<const std::size_t> idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(idx[k] + 1);
  }
  return s.empty() ? "(none)" : s;
}

std::string bound_label(char which, Entry m, Entry n) {
  return std::string(1, which) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

json bound_json(const BoundsResult& b) {
  json j{{"value", b.value}, {"case", to_string(b.tag)}};
  if (b.hard) {
    j["l"] = b.hard->l;
    j["square_fits"] = b.hard->square_fits;
    j["tall_fits"] = b.hard->tall_fits;
  }
  return j;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundsResult lower = lower_bound_L(o.m, o.n);
  const BoundsResult upper = upper_bound_U(o.m, o.n);
  const SplitParams& p = lower.params;
  if (o.structured()) {
    out << json{{"m", p.m}, {"n", p.n}, {"q", p.q}, {"r", p.r},
                {"L", bound_json(lower)}, {"U", bound_json(upper)}}.dump()
        << '\n';
    return kExitOk;
  }
  out << "m = " << p.m << ", n = " << p.n << ", q = " << p.q << ", r = " << p.r << '\n';
  out << bound_label('L', p.m, p.n) << " = " << lower.value << "  [" << to_string(lower.tag);
  if (lower.hard)
    out << ", l = " << lower.hard->l << ", square " << (lower.hard->square_fits ? "fits" : "fails")
        << ", tall " << (lower.hard->tall_fits ? "fits" : "fails");
  out << "]\n";
  out << bound_label('U', p.m, p.n) << " = " << upper.value << "  [" << to_string(upper.tag)
      << "]\n";
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const bool min_tdet = o.objective == "min-tdet";
  const DSMatrix a = min_tdet ? construct_min_tdet(o.m, o.n) : construct_max_tropdet(o.m, o.n);
  const BoundsResult bound = min_tdet ? lower_bound_L(o.m, o.n) : upper_bound_U(o.m, o.n);
  const Entry achieved = min_tdet ? tdet(a.matrix()).value : tropdet(a.matrix()).value;
  if (o.structured()) {
    out << json{{"objective", o.objective}, {"m", o.m}, {"n", o.n},
                {"matrix", json::parse(serialize(a, Format::Structured))},
                {"achieved", achieved}, {"bound", bound.value}, {"case", to_string(bound.tag)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << serialize(a) << '\n';
  out << (min_tdet ? "tdet = " : "tropdet = ") << achieved << '\n';
  out << bound_label(min_tdet ? 'L' : 'U', o.m, o.n) << " = " << bound.value << "  ["
      << to_string(bound.tag) << "]\n";
  return kExitOk;
}

int cmd_eval(const Options& o, Objective objective, std::istream& in, std::ostream& out) {
  const IntMatrix a = parse_matrix(read_input(o.file, in));
  const Transversal t = solve_assignment(a, objective);
  const char* name = objective == Objective::Max ? "tdet" : "tropdet";
  if (o.structured()) {
    out << json{{"which", name}, {"value", t.value}, {"perm", t.perm}}.dump() << '\n';
    return kExitOk;
  }
  out << name << " = " << t.value << '\n';
  out << "permutation (1-indexed, column per row): " << one_based(t.perm) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const DSMatrix a = validate_ds(parse_matrix(read_input(o.file, in)));
  if (o.expected_m && *o.expected_m != a.m()) {
    throw ViolationError(ViolationError::Line::Row, 0, a.m(), *o.expected_m,
                         "line sums are " + std::to_string(a.m()) + ", expected " +
                             std::to_string(*o.expected_m));
  }
  if (o.structured()) {
    out << json{{"member", true}, {"m", a.m()}, {"n", a.n()}}.dump() << '\n';
    return kExitOk;
  }
  out << "member of D(" << a.m() << "," << a.n() << "): yes\n";
  out << "m = " << a.m() << '\n';
  out << "n = " << a.n() << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumOptions options;
  options.budget = work_budget();
  options.jobs = o.jobs;
  if (o.stat == "count") {
    const std::uint64_t count = count_D(o.m, o.n, options);
    if (o.structured()) {
      out << json{{"stat", o.stat}, {"m", o.m}, {"n", o.n}, {"count", count}}.dump() << '\n';
    } else {
      out << "|D(" << o.m << "," << o.n << ")| = " << count << '\n';
    }
    return kExitOk;
  }
  const bool min_tdet = o.stat == "min-tdet";
  const EnumStats stats = min_tdet ? brute_L(o.m, o.n, options) : brute_U(o.m, o.n, options);
  if (o.structured()) {
    out << json{{"stat", o.stat}, {"m", o.m}, {"n", o.n}, {"count", stats.count},
                {"extremum", stats.extremum}, {"witness", matrix_json(stats.witness)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << (min_tdet ? "min tdet" : "max tropdet") << " over D(" << o.m << "," << o.n
      << ") = " << stats.extremum << '\n';
  out << "visited = " << stats.count << '\n';
  out << "witness:\n" << serialize(stats.witness) << '\n';
  return kExitOk;
}

int cmd_rubik(const Options& o, std::ostream& out) {
  const Entry answer = rubik_answer(o.colors, o.per_face);
  const BoundsResult lower = lower_bound_L(o.per_face, o.colors);
  const DSMatrix worst = construct_min_tdet(o.per_face, o.colors);
  if (o.structured()) {
    out << json{{"colors", o.colors}, {"stickers_per_face", o.per_face}, {"moves", answer},
                {"L", lower.value}, {"witness", json::parse(serialize(worst, Format::Structured))}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "stickers to move in the worst case = " << answer << '\n';
  out << bound_label('L', o.per_face, o.colors) << " = " << lower.value << "  ["
      << to_string(lower.tag) << "]\n";
  out << "worst case (rows = colors, columns = faces):\n" << serialize(worst) << '\n';
  return kExitOk;
}

int cmd_zero_block(const Options& o, std::istream& in, std::ostream& out) {
  const IntMatrix a = parse_matrix(read_input(o.file, in));
  if (!a.is_square())
    throw ShapeError("zero-block needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  const BlockDecomposition block = largest_low_block(a, o.threshold);
  const bool hall = block.size() <= a.rows();
  if (o.structured()) {
    out << json{{"threshold", o.threshold}, {"rows", block.row_set}, {"cols", block.col_set},
                {"size_R", block.row_set.size()}, {"size_S", block.col_set.size()},
                {"sum", block.size()}, {"hall_holds", hall}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "threshold = " << o.threshold << '\n';
  out << "|R| = " << block.row_set.size() << ", |S| = " << block.col_set.size()
      << ", sum = " << block.size() << '\n';
  out << "R (1-indexed) = " << one_based(block.row_set) << '\n';
  out << "S (1-indexed) = " << one_based(block.col_set) << '\n';
  out << "hall condition (sum <= " << a.rows() << "): " << (hall ? "holds" : "fails") << '\n';
  return kExitOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  const DSMatrix a = random_ds(o.m, o.n, o.seed);
  out << serialize(a, o.structured() ? Format::Structured : Format::Plain) << '\n';
  return kExitOk;
}

void add_mn(CLI::App* sub, Options& o) {
  const auto positive = CLI::Range(Entry{1}, std::numeric_limits<Entry>::max());
  sub->add_option("--m", o.m, "line sum m")->required()->check(positive);
  sub->add_option("--n", o.n, "matrix size n")->required()->check(positive);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tropical determinants over integer doubly-stochastic matrices", "tropdet"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"plain", "structured"}));

  auto* bounds = app.add_subcommand("bounds", "closed-form L(m,n) and U(m,n)");
  add_mn(bounds, o);

  auto* construct = app.add_subcommand("construct", "build an extremal member of D(m,n)");
  add_mn(construct, o);
  construct->add_option("--objective", o.objective, "min-tdet or max-tropdet")
      ->required()
      ->check(CLI::IsMember({"min-tdet", "max-tropdet"}));

  auto* tdet_cmd = app.add_subcommand("tdet", "maximum transversal sum of a matrix file");
  tdet_cmd->add_option("file", o.file, "matrix file, or - for stdin")->required();
  auto* tropdet_cmd = app.add_subcommand("tropdet", "minimum transversal sum of a matrix file");
  tropdet_cmd->add_option("file", o.file, "matrix file, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "check membership in D(m,n)");
  verify->add_option("file", o.file, "matrix file, or - for stdin")->required();
  verify->add_option("--m", o.expected_m, "expected line sum")
      ->check(CLI::Range(Entry{1}, std::numeric_limits<Entry>::max()));

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive statistics over D(m,n)");
  add_mn(enumerate, o);
  enumerate->add_option("--stat", o.stat, "count, min-tdet or max-tropdet")
      ->required()
      ->check(CLI::IsMember({"count", "min-tdet", "max-tropdet"}));
  enumerate->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* rubik = app.add_subcommand("rubik", "worst-case sticker moves for n colors, m per face");
  const auto positive = CLI::Range(Entry{1}, std::numeric_limits<Entry>::max());
  rubik->add_option("--colors", o.colors, "number of colors (faces)")->required()->check(positive);
  rubik->add_option("--stickers-per-face", o.per_face, "stickers per face")
      ->required()
      ->check(positive);

  auto* zero_block = app.add_subcommand("zero-block", "largest block of entries <= threshold");
  zero_block->add_option("file", o.file, "matrix file, or - for stdin")->required();
  zero_block->add_option("--threshold", o.threshold, "block entries are <= threshold")
      ->check(CLI::Range(Entry{0}, std::numeric_limits<Entry>::max()));

  auto* random = app.add_subcommand("random", "sum of m random permutation matrices");
  add_mn(random, o);
  random->add_option("--seed", o.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (tdet_cmd->parsed()) return cmd_eval(o, Objective::Max, in, out);
    if (tropdet_cmd->parsed()) return cmd_eval(o, Objective::Min, in, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (rubik->parsed()) return cmd_rubik(o, out);
    if (zero_block->parsed()) return cmd_zero_block(o, in, out);
    if (random->parsed()) return cmd_random(o, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "; raise " << kBudgetEnv << " to continue\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace tropical::cli
