// frobeval: evaluate polynomials over GF(p^m), explore the cost model, and
// compute Reed-Solomon syndromes, with exact operation ledgers.
//
// Exit codes: 0 success, 2 input error, 3 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobeval/frobeval.hpp"

namespace {

using frobeval::FieldElement;
using frobeval::OpCount;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

/// Input the user supplied is unusable.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A self-check found two strategies disagreeing.
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json ops_json(const OpCount& c) {
  return {{"mul", c.mul},
          {"pth_pow", c.pth_pow},
          {"add", c.add},
          {"frob", c.frob},
          {"paper_mult_equiv", c.paper_mult_equiv()}};
}

std::string ops_csv(const OpCount& c) {
  std::ostringstream os;
  os << c.mul << ',' << c.pth_pow << ',' << c.add << ',' << c.frob << ',' << c.paper_mult_equiv();
  return os.str();
}

std::string hex_byte(frobeval::Value v) {
  std::ostringstream os;
  os << std::hex << std::setw(2) << std::setfill('0') << v;
  return os.str();
}

unsigned worker_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("FROBEVAL_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError("FROBEVAL_THREADS must be a non-negative integer");
    }
  }
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  return n;
}

template <class F>
std::uint64_t time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

std::uint64_t median(std::vector<std::uint64_t> v) {
  if (v.empty()) return 0;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::string field = "p=2 m=8";
  std::string poly_path;
  bool raw = false;
  std::string point = "2";
  std::string strategy = "auto";
  int levels = -1;
  unsigned subfield_d = 0;
  bool split = false;
  bool check = false;
  std::string format = "text";
  std::string out;
};

frobeval::Polynomial load_polynomial(const frobeval::Field& field, const std::string& path, bool raw) {
  if (raw) {
    const auto bytes = frobeval::io::read_file_bytes(path);
    return frobeval::io::polynomial_from_bytes(field, bytes);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return frobeval::io::parse_polynomial(field, in);
}

int cmd_eval(const EvalOptions& o) {
  const auto field = frobeval::io::parse_field(o.field);
  const auto poly = load_polynomial(field, o.poly_path, o.raw);
  const FieldElement alpha = frobeval::io::parse_element(field, o.point);
  const std::optional<std::uint32_t> d =
      o.subfield_d == 0 ? std::nullopt : std::optional<std::uint32_t>(o.subfield_d);
  if (d) frobeval::require_divisor(field, *d);

  const std::uint64_t n = poly.degree().value_or(0);
  std::uint32_t L = 0;
  if (o.levels >= 0) {
    L = static_cast<std::uint32_t>(o.levels);
  } else if (n >= 1 && o.strategy == "auto") {
    L = o.split ? frobeval::choose_L(n, field, field.degree() / 2) : frobeval::choose_L(n, field, d);
  }

  OpCount ops;
  std::optional<frobeval::EvalReport> report;
  FieldElement value = field.zero();
  std::string mode = "-";
  const std::uint64_t ns = time_ns([&] {
    if (o.strategy == "horner") {
      value = frobeval::horner_eval(poly, alpha, ops);
    } else if (o.split) {
      if (field.degree() % 2 != 0) throw InputError("--split needs an even extension degree");
      const auto split = frobeval::make_split(field);
      report = frobeval::split_eval(poly, alpha, split, L, ops);
      value = report->value;
    } else {
      frobeval::EvalPlan plan{L, frobeval::LeafMode::transform_outputs, d};
      if (d && L % *d == 0) plan.leaf_mode = frobeval::LeafMode::fixed_coeffs;
      report = frobeval::auto_eval(poly, alpha, plan, ops);
      value = report->value;
    }
  });
  if (report) mode = frobeval::to_string(report->plan.leaf_mode);
  const std::string strategy_name = o.strategy == "horner" ? "horner" : (o.split ? "split" : "auto");

  std::optional<bool> agrees;
  OpCount horner_ops;
  if (o.check) {
    agrees = frobeval::horner_eval(poly, alpha, horner_ops) == value;
  }

  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json result{{"strategy", strategy_name}, {"value", value.value()}, {"L", L}, {"leaf_mode", mode},
                {"degree", poly.degree() ? json(*poly.degree()) : json(nullptr)}, {"ops", ops_json(ops)}};
    if (report) result["recombine_ops"] = ops_json(report->breakdown.recombine);
    if (agrees) result["check"] = {{"horner_value", value.value()}, {"agrees", *agrees}, {"horner_ops", ops_json(horner_ops)}};
    json doc{{"config",
              {{"subcommand", "eval"}, {"field", frobeval::io::format_field(field)}, {"poly", o.poly_path},
               {"point", alpha.value()}, {"strategy", o.strategy}, {"split", o.split},
               {"subfield_d", d ? json(*d) : json(nullptr)}}},
             {"results", json::array({result})},
             {"op_counts", ops_json(ops)},
             {"timings_ns", {{"eval", ns}}}};
    os << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "strategy,L,leaf_mode,value,mul,pth_pow,add,frob,paper_mult_equiv,check\n";
    os << strategy_name << ',' << L << ',' << mode << ',' << value.value() << ',' << ops_csv(ops) << ','
       << (agrees ? (*agrees ? "ok" : "mismatch") : "-") << "\n";
  } else {
    os << "field:    " << frobeval::io::format_field(field) << "\n"
       << "strategy: " << strategy_name;
    if (strategy_name != "horner") os << " (L=" << L << ", " << mode << ")";
    os << "\nvalue:    " << value.value() << "\n"
       << "ops:      " << ops << "\n";
    if (agrees) os << "check:    " << (*agrees ? "agrees with Horner" : "MISMATCH with Horner") << "\n";
  }
  if (agrees && !*agrees) throw MismatchError("value differs from Horner");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cost

struct CostOptions {
  std::uint32_t p = 2;
  std::uint32_t m = 8;
  std::vector<std::uint32_t> d;
  std::vector<std::uint64_t> n{254};
  std::string format = "text";
  std::string out;
};

int cmd_cost(const CostOptions& o) {
  namespace cost = frobeval::cost;
  std::vector<std::uint32_t> ds = o.d.empty() ? std::vector<std::uint32_t>{o.m} : o.d;
  for (auto n : o.n) {
    if (n < 1) throw InputError("--n values must be at least 1");
  }

  struct Row {
    cost::CostParams params;
    cost::Variant variant;
    cost::OptimalL opt;
    double g_int;
    double closed_min;
    std::uint64_t horner;
    std::uint64_t sweep_max;
    std::vector<double> sweep;
    std::optional<double> prime_bound;
    std::optional<double> split;
    std::optional<double> split_asym;
  };
  std::vector<Row> rows;
  for (auto d : ds) {
    for (auto n : o.n) {
      Row r{};
      r.params = {n, o.p, o.m, d};
      try {
        r.variant = cost::variant_of(r.params);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      r.opt = cost::optimal_L(r.params);
      r.g_int = cost::g(r.opt.L_int, r.params);
      r.closed_min = cost::min_cost(r.params);
      r.horner = cost::horner_cost(n).mul;
      r.sweep_max = static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(n)) / std::log(o.p))) + 2;
      for (std::uint64_t L = 0; L <= r.sweep_max; ++L) r.sweep.push_back(cost::g(static_cast<double>(L), r.params));
      if (o.p == 2 && d == 1) r.prime_bound = cost::prime_field_bound(n);
      if (o.m % 2 == 0) {
        r.split = cost::split_cost(n, o.p, o.m);
        if (o.p == 2) r.split_asym = cost::split_cost_asymptotic(n);
      }
      rows.push_back(std::move(r));
    }
  }

  Output out(o.out);
  auto& os = out.stream();
  auto opt_num = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  if (o.format == "json") {
    json results = json::array();
    for (const auto& r : rows) {
      results.push_back({{"p", r.params.p}, {"m", r.params.m}, {"d", r.params.d}, {"n", r.params.n},
                         {"variant", cost::to_string(r.variant)}, {"L_star", r.opt.L_star},
                         {"L_int", r.opt.L_int}, {"g_L_int", r.g_int}, {"closed_form_min", r.closed_min},
                         {"horner_mul", r.horner}, {"crossover", r.g_int < static_cast<double>(r.horner)},
                         {"sweep", r.sweep}, {"prime_field_bound", opt_num(r.prime_bound)},
                         {"split_cost", opt_num(r.split)}, {"split_cost_asymptotic", opt_num(r.split_asym)}});
    }
    json doc{{"config", {{"subcommand", "cost"}, {"p", o.p}, {"m", o.m}, {"d", ds}, {"n", o.n}}},
             {"results", results},
             {"op_counts", ops_json(OpCount{})},
             {"timings_ns", json::object()}};
    os << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "p,m,d,n,variant,L,g_L,L_star,L_int,closed_form_min,horner_mul,crossover,prime_field_bound,"
          "split_cost,split_cost_asymptotic\n";
    auto cell = [](const std::optional<double>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows) {
      for (std::size_t L = 0; L < r.sweep.size(); ++L) {
        os << r.params.p << ',' << r.params.m << ',' << r.params.d << ',' << r.params.n << ','
           << cost::to_string(r.variant) << ',' << L << ',' << r.sweep[L] << ',' << r.opt.L_star << ','
           << r.opt.L_int << ',' << r.closed_min << ',' << r.horner << ','
           << (r.g_int < static_cast<double>(r.horner) ? 1 : 0) << ',' << cell(r.prime_bound) << ','
           << cell(r.split) << ',' << cell(r.split_asym) << "\n";
      }
    }
  } else {
    for (const auto& r : rows) {
      os << "p=" << r.params.p << " m=" << r.params.m << " d=" << r.params.d << " n=" << r.params.n << " ("
         << cost::to_string(r.variant) << ")\n";
      for (std::size_t L = 0; L < r.sweep.size(); ++L) {
        os << "  g(" << L << ") = " << r.sweep[L] << (L == r.opt.L_int ? "   <- L_int" : "") << "\n";
      }
      os << "  L* = " << r.opt.L_star << ", L_int = " << r.opt.L_int << ", g(L_int) = " << r.g_int
         << ", closed-form minimum = " << r.closed_min << "\n"
         << "  Horner = " << r.horner << " multiplications, "
         << (r.g_int < static_cast<double>(r.horner) ? "automorphic cheaper" : "Horner cheaper") << "\n";
      if (r.prime_bound) os << "  2*sqrt(3n) = " << *r.prime_bound << "\n";
      if (r.split) {
        os << "  two half-field evaluations = " << *r.split;
        if (r.split_asym) os << " (asymptotic " << *r.split_asym << ")";
        os << "\n";
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string field = "p=2 m=8";
  std::uint64_t n = 254;
  unsigned subfield_d = 0;
  int levels = -1;
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned trials = 11;
  std::size_t rs_batch = 0;
  std::string format = "text";
  std::string out;
};

struct BenchRow {
  std::string strategy;
  std::uint32_t L = 0;
  OpCount ops;  // summed over trials
  std::uint64_t median_ns = 0;
  bool agrees = true;
};

int cmd_bench(const BenchOptions& o) {
  if (!o.seed_given) throw InputError("bench needs --seed");
  if (o.trials == 0) throw InputError("--trials must be positive");
  std::vector<BenchRow> rows;
  json extra = json::object();

  if (o.rs_batch > 0) {
    namespace rs = frobeval::rs;
    const auto code = rs::rs_new();
    std::mt19937_64 rng(o.seed);
    std::vector<rs::Word> words(o.rs_batch, rs::Word(rs::kLength));
    for (auto& w : words) {
      for (auto& b : w) b = static_cast<std::uint8_t>(rng());
    }
    const unsigned threads = worker_threads();
    std::optional<rs::BatchResult> by_strategy[2];
    for (int s = 0; s < 2; ++s) {
      const auto strategy = s == 0 ? rs::Strategy::horner : rs::Strategy::automorphic;
      std::vector<std::uint64_t> times;
      for (unsigned t = 0; t < o.trials; ++t) {
        times.push_back(time_ns([&] { by_strategy[s] = rs::syndromes_batch(words, strategy, code, threads); }));
      }
      rows.push_back({rs::to_string(strategy), s == 0 ? 0U : rs::kLevels, by_strategy[s]->total, median(times), true});
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (by_strategy[0]->sets[i].values != by_strategy[1]->sets[i].values) rows[1].agrees = false;
    }
    const auto K = static_cast<std::uint64_t>(o.rs_batch);
    extra = {{"K", K}, {"horner_formula", 31 + 8128 * K}, {"auto_formula", 3823 + 2912 * K}};
  } else {
    const auto field = frobeval::io::parse_field(o.field);
    const std::optional<std::uint32_t> d =
        o.subfield_d == 0 ? std::nullopt : std::optional<std::uint32_t>(o.subfield_d);
    if (d) frobeval::require_divisor(field, *d);
    if (o.n < 1) throw InputError("--n must be at least 1");
    const std::uint32_t L = o.levels >= 0 ? static_cast<std::uint32_t>(o.levels) : frobeval::choose_L(o.n, field, d);
    std::optional<frobeval::SubfieldSplit> split;
    std::uint32_t split_L = 0;
    if (field.degree() % 2 == 0 && field.order() <= (1U << 24)) {
      split = frobeval::make_split(field);
      split_L = o.levels >= 0 ? L : frobeval::choose_L(o.n, field, field.degree() / 2);
    }

    std::vector<std::string> names{"horner", "auto"};
    if (split) names.push_back("split");
    std::vector<std::vector<std::uint64_t>> times(names.size());
    rows.resize(names.size());
    for (std::size_t s = 0; s < names.size(); ++s) {
      rows[s].strategy = names[s];
      rows[s].L = s == 0 ? 0 : (s == 1 ? L : split_L);
    }
    std::mt19937_64 rng(o.seed);
    for (unsigned t = 0; t < o.trials; ++t) {
      const auto poly = frobeval::poly_random(field, o.n, d, rng());
      const FieldElement alpha = field.element(std::uniform_int_distribution<frobeval::Value>(0, field.order() - 1)(rng));
      FieldElement expected = field.zero();
      times[0].push_back(time_ns([&] { expected = frobeval::horner_eval(poly, alpha, rows[0].ops); }));
      frobeval::EvalPlan plan{L, frobeval::LeafMode::transform_outputs, d};
      if (d && L % *d == 0) plan.leaf_mode = frobeval::LeafMode::fixed_coeffs;
      std::optional<FieldElement> got;
      times[1].push_back(time_ns([&] { got = frobeval::auto_eval(poly, alpha, plan, rows[1].ops).value; }));
      rows[1].agrees = rows[1].agrees && *got == expected;
      if (split) {
        times[2].push_back(time_ns([&] { got = frobeval::split_eval(poly, alpha, *split, split_L, rows[2].ops).value; }));
        rows[2].agrees = rows[2].agrees && *got == expected;
      }
    }
    for (std::size_t s = 0; s < names.size(); ++s) rows[s].median_ns = median(times[s]);
  }

  const double horner_equiv = static_cast<double>(rows[0].ops.paper_mult_equiv());
  auto ratio = [&](const BenchRow& r) {
    return horner_equiv == 0 ? 0.0 : static_cast<double>(r.ops.paper_mult_equiv()) / horner_equiv;
  };

  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json results = json::array();
    json timings = json::object();
    OpCount all;
    for (const auto& r : rows) {
      results.push_back({{"strategy", r.strategy}, {"L", r.L}, {"ops", ops_json(r.ops)},
                         {"mult_ratio_vs_horner", ratio(r)}, {"agrees_with_horner", r.agrees}});
      timings[r.strategy] = r.median_ns;
      all += r.ops;
    }
    json config{{"subcommand", "bench"}, {"field", o.rs_batch ? "p=2 m=8 modulus=100101011" : o.field},
                {"n", o.rs_batch ? 254 : o.n}, {"seed", o.seed}, {"trials", o.trials}, {"rs_batch", o.rs_batch}};
    if (!extra.empty()) config["ledger_formulas"] = extra;
    json doc{{"config", config}, {"results", results}, {"op_counts", ops_json(all)}, {"timings_ns", timings}};
    os << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "strategy,L,trials,median_ns,mul,pth_pow,add,frob,paper_mult_equiv,mult_ratio_vs_horner,agrees\n";
    for (const auto& r : rows) {
      os << r.strategy << ',' << r.L << ',' << o.trials << ',' << r.median_ns << ',' << ops_csv(r.ops) << ','
         << ratio(r) << ',' << (r.agrees ? 1 : 0) << "\n";
    }
  } else {
    if (o.rs_batch) {
      os << "Reed-Solomon batch K=" << o.rs_batch << " (expected " << extra["horner_formula"] << " Horner, "
         << extra["auto_formula"] << " automorphic)\n";
    }
    for (const auto& r : rows) {
      os << std::left << std::setw(7) << r.strategy << " L=" << r.L << "  median " << r.median_ns << " ns  "
         << r.ops << "  ratio " << ratio(r) << (r.agrees ? "" : "  MISMATCH") << "\n";
    }
  }
  for (const auto& r : rows) {
    if (!r.agrees) throw MismatchError(r.strategy + " disagrees with Horner");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// syndromes

struct SyndromeOptions {
  std::string words_path;
  std::string strategy = "both";
  bool subfield_mul = false;
  std::string format = "text";
  std::string out;
};

int cmd_syndromes(const SyndromeOptions& o) {
  namespace rs = frobeval::rs;
  const auto bytes = frobeval::io::read_file_bytes(o.words_path);
  const auto words = frobeval::io::split_words(bytes);
  const auto code = rs::rs_new();
  const unsigned threads = worker_threads();
  const auto mode = o.subfield_mul ? rs::MulMode::subfield : rs::MulMode::full_field;

  std::vector<rs::Strategy> strategies;
  if (o.strategy == "horner" || o.strategy == "both") strategies.push_back(rs::Strategy::horner);
  if (o.strategy == "auto" || o.strategy == "both") strategies.push_back(rs::Strategy::automorphic);

  std::vector<rs::BatchResult> batches;
  std::vector<std::uint64_t> timings;
  for (auto s : strategies) {
    std::optional<rs::BatchResult> b;
    timings.push_back(time_ns([&] { b = rs::syndromes_batch(words, s, code, threads, mode); }));
    batches.push_back(std::move(*b));
  }
  bool agree = true;
  if (batches.size() == 2) {
    for (std::size_t i = 0; i < words.size(); ++i) agree = agree && batches[0].sets[i].values == batches[1].sets[i].values;
  }

  Output out(o.out);
  auto& os = out.stream();
  auto hex_list = [](const rs::SyndromeSet& s) {
    std::vector<std::string> h;
    for (const auto& v : s.values) h.push_back(hex_byte(v.value()));
    return h;
  };
  if (o.format == "json") {
    json results = json::array();
    json ledgers = json::object();
    json times = json::object();
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const std::string name = rs::to_string(strategies[b]);
      for (std::size_t i = 0; i < words.size(); ++i) {
        json r{{"strategy", name}, {"word", i}, {"syndromes", hex_list(batches[b].sets[i])},
               {"zero", batches[b].sets[i].all_zero()}, {"ops", ops_json(batches[b].sets[i].ops)}};
        if (batches[b].sets[i].subfield_ops) r["subfield_ops"] = ops_json(*batches[b].sets[i].subfield_ops);
        results.push_back(std::move(r));
      }
      ledgers[name] = {{"precompute", ops_json(batches[b].precompute)}, {"total", ops_json(batches[b].total)}};
      times[name] = timings[b];
    }
    json doc{{"config", {{"subcommand", "syndromes"}, {"words", o.words_path}, {"K", words.size()},
                         {"strategy", o.strategy}, {"subfield_mul", o.subfield_mul}}},
             {"results", results},
             {"op_counts", ops_json(batches.back().total)},
             {"timings_ns", times},
             {"ledgers", ledgers},
             {"strategies_agree", agree}};
    os << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "strategy,word,syndromes_hex,mul,pth_pow,add,frob,paper_mult_equiv\n";
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const std::string name = rs::to_string(strategies[b]);
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::string h;
        for (const auto& x : hex_list(batches[b].sets[i])) h += (h.empty() ? "" : " ") + x;
        os << name << ',' << i << ',' << h << ',' << ops_csv(batches[b].sets[i].ops) << "\n";
      }
      os << name << ",precompute,," << ops_csv(batches[b].precompute) << "\n";
      os << name << ",total,," << ops_csv(batches[b].total) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < words.size(); ++i) {
      os << "word " << i << ":";
      for (const auto& x : hex_list(batches.front().sets[i])) os << ' ' << x;
      os << "\n";
    }
    os << "ledger (K=" << words.size() << ", multiplications incl. p-th powers):\n";
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const auto& batch = batches[b];
      os << "  " << std::left << std::setw(7) << rs::to_string(strategies[b])
         << " precompute=" << batch.precompute.paper_mult_equiv()
         << " per_word=" << batch.sets.front().ops.paper_mult_equiv()
         << " total=" << batch.total.paper_mult_equiv() << "  [" << batch.total << "]\n";
      if (batch.sets.front().subfield_ops) {
        os << "          GF(16) ops per word: " << *batch.sets.front().subfield_ops << "\n";
      }
    }
    if (batches.size() == 2) os << "strategies " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  if (!agree) throw MismatchError("Horner and automorphic syndromes differ");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen-words

struct GenOptions {
  std::size_t count = 1;
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned errors = 0;
  std::string out;
};

int cmd_gen_words(const GenOptions& o) {
  namespace rs = frobeval::rs;
  if (!o.seed_given) throw InputError("gen-words needs --seed");
  if (o.out.empty()) throw InputError("gen-words needs --out");
  const auto code = rs::rs_new();
  std::mt19937_64 rng(o.seed);
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + o.out + "'");
  for (std::size_t k = 0; k < o.count; ++k) {
    rs::Word msg(rs::kDimension);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
    rs::Word word = rs::encode(msg, code);
    for (unsigned e = 0; e < o.errors; ++e) {
      word[rng() % rs::kLength] ^= static_cast<std::uint8_t>(1 + rng() % 255);
    }
    file.write(reinterpret_cast<const char*>(word.data()), static_cast<std::streamsize>(word.size()));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial evaluation over finite fields with exact operation ledgers"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at one point");
  eval_cmd->add_option("--field", eval.field, "Field, e.g. \"p=2 m=8 modulus=100101011\"");
  eval_cmd->add_option("--poly", eval.poly_path, "Polynomial file, one element per line")->required();
  eval_cmd->add_flag("--raw", eval.raw, "Polynomial file is raw bytes (GF(2^8))");
  eval_cmd->add_option("--point", eval.point, "Evaluation point as an element integer");
  eval_cmd->add_option("--strategy", eval.strategy, "horner | auto")
      ->check(CLI::IsMember({"horner", "auto"}));
  eval_cmd->add_option("--L", eval.levels, "Decomposition depth (default: cost-model choice)")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--subfield-d", eval.subfield_d, "Coefficients lie in GF(p^d)");
  eval_cmd->add_flag("--split", eval.split, "Evaluate as P1 + gamma*P2 over the half-degree subfield");
  eval_cmd->add_flag("--check", eval.check, "Also run Horner; exit 3 on disagreement");
  eval_cmd->add_option("--format", eval.format, "text | json | csv (columns: strategy,L,leaf_mode,value,"
                                                "mul,pth_pow,add,frob,paper_mult_equiv,check)")
      ->check(CLI::IsMember(formats));
  eval_cmd->add_option("--out", eval.out, "Write the report here instead of stdout");

  CostOptions cost;
  std::string cost_field;
  auto* cost_cmd = app.add_subcommand("cost", "Tabulate the multiplication-count model");
  cost_cmd->add_option("--p", cost.p, "Characteristic");
  cost_cmd->add_option("--m", cost.m, "Extension degree");
  cost_cmd->add_option("--field", cost_field, "Take p and m from a field description");
  cost_cmd->add_option("--d", cost.d, "Coefficient subfield degrees (default m)");
  cost_cmd->add_option("--n", cost.n, "Polynomial degrees");
  cost_cmd->add_option("--format", cost.format, "text | json | csv (columns: p,m,d,n,variant,L,g_L,L_star,"
                                                "L_int,closed_form_min,horner_mul,crossover,prime_field_bound,"
                                                "split_cost,split_cost_asymptotic)")
      ->check(CLI::IsMember(formats));
  cost_cmd->add_option("--out", cost.out, "Write the report here instead of stdout");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time and count strategies on seeded random instances");
  bench_cmd->add_option("--field", bench.field, "Field description");
  bench_cmd->add_option("--n", bench.n, "Polynomial degree");
  bench_cmd->add_option("--subfield-d", bench.subfield_d, "Coefficients drawn from GF(p^d)");
  bench_cmd->add_option("--L", bench.levels, "Decomposition depth (default: cost-model choice)")
      ->check(CLI::NonNegativeNumber);
  auto* bench_seed = bench_cmd->add_option("--seed", bench.seed, "RNG seed (required)");
  bench_cmd->add_option("--trials", bench.trials, "Trials; timings are medians (default 11)");
  bench_cmd->add_option("--rs-batch", bench.rs_batch, "Instead: Reed-Solomon syndromes of K random words");
  bench_cmd->add_option("--format", bench.format, "text | json | csv (columns: strategy,L,trials,median_ns,"
                                                  "mul,pth_pow,add,frob,paper_mult_equiv,mult_ratio_vs_horner,"
                                                  "agrees)")
      ->check(CLI::IsMember(formats));
  bench_cmd->add_option("--out", bench.out, "Write the report here instead of stdout");

  SyndromeOptions synd;
  auto* synd_cmd = app.add_subcommand("syndromes", "RS[255,223,33] syndromes of 255-byte words");
  synd_cmd->add_option("--words", synd.words_path, "File of concatenated 255-byte words")->required();
  synd_cmd->add_option("--strategy", synd.strategy, "horner | auto | both")
      ->check(CLI::IsMember({"horner", "auto", "both"}));
  synd_cmd->add_flag("--subfield-mul", synd.subfield_mul, "Automorphic multiplications in GF(16)");
  synd_cmd->add_option("--format", synd.format, "text | json | csv (columns: strategy,word,syndromes_hex,"
                                                "mul,pth_pow,add,frob,paper_mult_equiv)")
      ->check(CLI::IsMember(formats));
  synd_cmd->add_option("--out", synd.out, "Write the report here instead of stdout");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-words", "Write seeded random RS codewords, optionally corrupted");
  gen_cmd->add_option("--count", gen.count, "Number of words");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "RNG seed (required)");
  gen_cmd->add_option("--errors", gen.errors, "Random symbol errors per word");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval);
    if (*cost_cmd) {
      if (!cost_field.empty()) {
        const auto f = frobeval::io::parse_field(cost_field);
        cost.p = f.characteristic();
        cost.m = f.degree();
      }
      return cmd_cost(cost);
    }
    if (*bench_cmd) {
      bench.seed_given = bench_seed->count() > 0;
      return cmd_bench(bench);
    }
    if (*synd_cmd) return cmd_syndromes(synd);
    if (*gen_cmd) {
      gen.seed_given = gen_seed->count() > 0;
      return cmd_gen_words(gen);
    }
  } catch (const MismatchError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
