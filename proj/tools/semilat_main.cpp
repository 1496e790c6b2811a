// Command-line front end: transforms and inversions over problem files,
// clopen base-set measures with a built-in cross-check, kernel benchmarks,
// and the three-set union-counting demo.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"
#include "semilat/semilat.hpp"

namespace {

using namespace semilat;

ProblemFile load_problem_file(const std::string& path, bool close) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  return load_problem(in, close);
}

TableFile load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file '" + path + "'");
  return read_table(in);
}

// ---------------------------------------------------------------- transform

template <class Scalar>
void run_transform(const ProblemFile& problem, const WeightFn<Scalar>& weights,
                   bool all, const std::vector<std::string>& queries) {
  if (all) {
    if (!problem.ground.dense_capable())
      throw TooLarge("--all needs a ground set of at most " +
                     std::to_string(GroundSet::kDenseLimit) + " elements");
    TransformTable<Scalar> table = zeta_fast(weights);
    const std::size_t size = std::size_t{1} << problem.ground.size();
    for (Mask m = 0; m < size; ++m)
      write_table_row(std::cout, problem.ground, problem.ground.subset(m), table.at(m));
    return;
  }
  std::vector<Subset> parsed;
  parsed.reserve(queries.size());
  for (const std::string& q : queries) parsed.push_back(parse_subset_key(problem.ground, q));
  std::vector<Scalar> values = zeta_sparse(weights, parsed);
  for (std::size_t i = 0; i < parsed.size(); ++i)
    write_table_row(std::cout, problem.ground, parsed[i], values[i]);
}

int cmd_transform(const std::string& path, bool all, bool close,
                  const std::vector<std::string>& queries) {
  if (all && !queries.empty())
    throw BadArguments("--all cannot be combined with explicit queries");
  if (!all && queries.empty())
    throw BadArguments("give subset-key queries or --all");
  ProblemFile problem = load_problem_file(path, close);
  if (problem.kind == ScalarKind::rational)
    run_transform(problem, problem.rational_weights(), all, queries);
  else
    run_transform(problem, problem.float_weights(), all, queries);
  return 0;
}

// ------------------------------------------------------------------- invert

template <class Scalar>
Scalar table_value(const TableFile& table, const GroundSet& ground, Mask x);

template <>
Rational table_value<Rational>(const TableFile& table, const GroundSet& ground, Mask x) {
  std::string key = subset_key(ground, ground.subset(x));
  auto it = table.rows.find(key);
  if (it == table.rows.end())
    throw IncompleteTable("table has no row for subset '" + key + "'");
  return parse_rational_value(it->second);
}

template <>
double table_value<double>(const TableFile& table, const GroundSet& ground, Mask x) {
  std::string key = subset_key(ground, ground.subset(x));
  auto it = table.rows.find(key);
  if (it == table.rows.end())
    throw IncompleteTable("table has no row for subset '" + key + "'");
  return parse_float_value(it->second);
}

template <class Scalar>
void run_invert(const TableFile& table, bool family_mode,
                const std::vector<std::string>& queries) {
  const GroundSet& ground = table.ground;
  auto f = [&](Mask x) { return table_value<Scalar>(table, ground, x); };
  std::vector<Subset> parsed;
  parsed.reserve(queries.size());
  for (const std::string& q : queries) parsed.push_back(parse_subset_key(ground, q));
  if (family_mode) {
    FamilyMeasureQuery query(parsed);
    std::cout << format_scalar(invert_measure(f, query)) << '\n';
    return;
  }
  for (const Subset& a : parsed)
    write_table_row(std::cout, ground, a, invert_point(f, a));
}

int cmd_invert(const std::string& path, bool family_mode, const std::string& scalar,
               const std::vector<std::string>& queries) {
  if (queries.empty()) throw BadArguments("give at least one subset-key query");
  TableFile table = load_table_file(path);
  if (scalar == "float")
    run_invert<double>(table, family_mode, queries);
  else
    run_invert<Rational>(table, family_mode, queries);
  return 0;
}

// ------------------------------------------------------------- base-measure

template <class Scalar, class F>
int report_base_measure(const GroundSet& ground, const PointMeasure<Scalar>& mu,
                        const BaseSet& base, F&& f) {
  Scalar inverted = invert_base_measure(f, ground, base);
  Scalar direct = oracle_base_measure(mu, base);
  bool match;
  if constexpr (std::is_floating_point_v<Scalar>) {
    // Different groupings of float sums; compare with a tight relative bound.
    match = std::fabs(inverted - direct) <= 1e-9 * std::max(1.0, std::fabs(direct));
  } else {
    match = (inverted == direct);
  }
  std::cout << "inversion: " << format_scalar(inverted) << '\n';
  std::cout << "direct: " << format_scalar(direct) << '\n';
  std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? 0 : 1;
}

int cmd_base_measure(const std::string& path, const std::string& f_key,
                     const std::vector<std::string>& u_keys,
                     const std::string& table_path, bool close) {
  ProblemFile problem = load_problem_file(path, close);
  const GroundSet& ground = problem.ground;
  Subset excluded = parse_subset_key(ground, f_key);
  std::vector<Subset> required;
  required.reserve(u_keys.size());
  for (const std::string& k : u_keys) required.push_back(parse_subset_key(ground, k));
  BaseSet base(excluded, std::move(required));

  if (problem.kind == ScalarKind::rational) {
    PointMeasure<Rational> mu(problem.family, problem.rational_values);
    if (!table_path.empty()) {
      TableFile table = load_table_file(table_path);
      auto f = [&](Mask x) { return table_value<Rational>(table, ground, x); };
      return report_base_measure(ground, mu, base, f);
    }
    auto f = [&](Mask x) { return laplace_of_measure(mu, ground.subset(x)); };
    return report_base_measure(ground, mu, base, f);
  }
  PointMeasure<double> mu(problem.family, problem.float_values);
  if (!table_path.empty()) {
    TableFile table = load_table_file(table_path);
    auto f = [&](Mask x) { return table_value<double>(table, ground, x); };
    return report_base_measure(ground, mu, base, f);
  }
  auto f = [&](Mask x) { return laplace_of_measure(mu, ground.subset(x)); };
  return report_base_measure(ground, mu, base, f);
}

// -------------------------------------------------------------------- bench

void print_bench_line(const char* kernel, int n, double millis) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", millis);
  std::cout << kernel << ',' << n << ',' << buf << '\n';
}

int cmd_bench(int n, int reps) {
  if (n < 4 || n > GroundSet::kDenseLimit)
    throw BadArguments("bench size must be in [4, " +
                       std::to_string(GroundSet::kDenseLimit) + "]");
  GroundSet ground(n);
  const std::size_t size = std::size_t{1} << n;

  // Integer-valued doubles: every partial sum is exact, so fast and naive
  // results must agree bitwise whatever the summation order.
  std::mt19937_64 rng(0x5eed5a17u);
  std::uniform_int_distribution<int> dist(0, 100);
  std::vector<double> dense(size);
  for (double& v : dense) v = dist(rng);

  using clock = std::chrono::steady_clock;
  auto millis_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  double zeta_ms = -1.0;
  std::vector<double> fast_zeta;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> work = dense;  // buffer copy outside the clock
    auto start = clock::now();
    TransformTable<double> table = zeta_fast(ground, std::move(work));
    double ms = millis_since(start);
    if (zeta_ms < 0 || ms < zeta_ms) zeta_ms = ms;
    fast_zeta.assign(table.values().begin(), table.values().end());
  }
  print_bench_line("zeta_fast", n, zeta_ms);

  TransformTable<double> table(ground, fast_zeta);
  double mobius_ms = -1.0;
  std::vector<double> fast_mobius;
  for (int r = 0; r < reps; ++r) {
    auto start = clock::now();
    fast_mobius = mobius_fast(table);
    double ms = millis_since(start);
    if (mobius_ms < 0 || ms < mobius_ms) mobius_ms = ms;
  }
  print_bench_line("mobius_fast", n, mobius_ms);

  if (n <= 16) {
    auto start = clock::now();
    std::vector<double> naive_zeta = oracle_dense_zeta<double>(ground, dense);
    print_bench_line("oracle_zeta", n, millis_since(start));

    start = clock::now();
    std::vector<double> naive_mobius = oracle_dense_mobius<double>(ground, fast_zeta);
    print_bench_line("oracle_mobius", n, millis_since(start));

    if (naive_zeta != fast_zeta || naive_mobius != fast_mobius ||
        fast_mobius != dense) {
      std::cerr << "bench: fast kernels disagree with the naive oracle\n";
      return 1;
    }
  }
  return 0;
}

// -------------------------------------------------------------------- demo

int cmd_demo_ie(const std::string& universe_key, const std::string& a_key,
                const std::string& b_key, const std::string& c_key) {
  std::vector<std::string> labels;
  for (const std::string& raw : io_detail::split(universe_key, ','))
    labels.emplace_back(io_detail::trim(raw));
  GroundSet universe = make_ground(std::move(labels));
  if (universe.size() > 20) throw TooLarge("demo universe larger than 20 elements");
  Subset a = parse_subset_key(universe, a_key);
  Subset b = parse_subset_key(universe, b_key);
  Subset c = parse_subset_key(universe, c_key);

  SieveReport r = sieve_union_count(universe, a, b, c);
  std::cout << "universe: " << r.universe_size << " elements\n";
  std::cout << "|A| = " << r.size_a << ", |B| = " << r.size_b << ", |C| = " << r.size_c
            << '\n';
  std::cout << "|A∩B| = " << r.ab << ", |A∩C| = " << r.ac << ", |B∩C| = " << r.bc
            << ", |A∩B∩C| = " << r.abc << '\n';
  std::cout << "classic alternating sum: " << r.size_a << " + " << r.size_b << " + "
            << r.size_c << " - " << r.ab << " - " << r.ac << " - " << r.bc << " + "
            << r.abc << " = " << r.classic << '\n';
  std::cout << "inversion on the index lattice: uncovered = " << r.uncovered
            << ", union = " << r.universe_size << " - " << r.uncovered << " = "
            << r.via_inversion << '\n';
  std::cout << "direct count: " << r.direct << '\n';
  std::cout << "verdict: " << (r.match() ? "MATCH" : "MISMATCH") << '\n';
  return r.match() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace transform on union-closed set families"};
  app.require_subcommand(1);

  std::string problem_path, table_path, f_key, scalar = "rational";
  std::vector<std::string> queries, u_keys;
  bool all = false, close = false, family_mode = false;
  int bench_n = 0, bench_reps = 3;
  std::string universe_key, a_key, b_key, c_key;

  CLI::App* transform = app.add_subcommand("transform", "forward transform of a problem file");
  transform->add_option("file", problem_path, "problem file")->required();
  transform->add_option("queries", queries, "subset keys to evaluate");
  transform->add_flag("--all", all, "emit the full dense table (needs size <= 24)");
  transform->add_flag("--close", close, "take the union closure of the declared members");

  CLI::App* invert = app.add_subcommand("invert", "recover weights from a transform table");
  invert->add_option("table", table_path, "transform table file")->required();
  invert->add_option("queries", queries, "subset keys to invert");
  invert->add_flag("--family", family_mode,
                   "treat the queries as one family and print its total weight");
  invert->add_option("--scalar", scalar, "value mode: rational|float")
      ->check(CLI::IsMember({"rational", "float"}));

  CLI::App* base = app.add_subcommand("base-measure",
                                      "measure of a clopen base set, with cross-check");
  base->add_option("file", problem_path, "problem file")->required();
  base->add_option("--f", f_key, "excluded set key (default: empty set)");
  base->add_option("--u", u_keys, "required-hit set key (repeatable)");
  base->add_option("--table", table_path,
                   "read f from a transform table instead of the weights");
  base->add_flag("--close", close, "take the union closure of the declared members");

  CLI::App* bench = app.add_subcommand("bench", "time the dense kernels against the oracle");
  bench->add_option("n", bench_n, "ground set size")->required();
  bench->add_option("--reps", bench_reps, "repetitions (best time wins)")
      ->check(CLI::PositiveNumber);

  CLI::App* demo = app.add_subcommand("demo-ie", "three-set union counting, three ways");
  demo->add_option("universe", universe_key, "comma-joined universe labels")->required();
  demo->add_option("a", a_key, "subset key of A")->required();
  demo->add_option("b", b_key, "subset key of B")->required();
  demo->add_option("c", c_key, "subset key of C")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (transform->parsed()) return cmd_transform(problem_path, all, close, queries);
    if (invert->parsed()) return cmd_invert(table_path, family_mode, scalar, queries);
    if (base->parsed())
      return cmd_base_measure(problem_path, f_key, u_keys, table_path, close);
    if (bench->parsed()) return cmd_bench(bench_n, bench_reps);
    if (demo->parsed()) return cmd_demo_ie(universe_key, a_key, b_key, c_key);
  } catch (const semilat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
