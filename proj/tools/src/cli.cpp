#include "cgw_cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cgw/ball.hpp"
#include "cgw/engines.hpp"
#include "cgw/equivgrowth.hpp"
#include "cgw/error.hpp"
#include "cgw/growth.hpp"
#include "cgw/serialize.hpp"
#include "cgw/smallcancel.hpp"
#include "cgw_cli/cache.hpp"

#ifndef CGW_VERSION
#define CGW_VERSION "0.0.0"
#endif

namespace cgw::cli {

namespace {

struct Options {
  std::string group;
  std::string word;
  std::size_t radius = 0;
  std::size_t budget = kDefaultBallBudget;
  std::optional<std::size_t> threads;
  std::optional<std::string> format;
  std::optional<std::string> cache;
  std::string output;
  std::string plot;
  std::string generators;
  std::size_t pair_budget = GrowthOptions{}.pair_budget;
  std::size_t conjugator_radius = GrowthOptions{}.conjugator_radius;
  // compare
  std::string f;
  std::string g;
  std::int64_t cmax = 0;
  std::string mode = "equiv";
  std::optional<std::size_t> samples;
  // check-sc
  std::vector<std::string> words;
  std::string words_file;
  std::size_t eps = 1;
  std::string mu = "1/2";
  std::string lambda = "1";
  std::int64_t c = 0;
  std::size_t rho = 1;
  std::size_t letter_bound = 0;
  std::size_t piece_budget = PieceOptions{}.budget;
  std::size_t distance_budget = kDefaultDistanceBudget;
  // hat-metric
  int factor = 0;
  std::string h1;
  std::string h2;
  // gen-w
  std::size_t n = 0;
  std::string x;
  std::string plan;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  const EnvLookup& env;
  std::size_t threads = 1;
  std::optional<Cache> cache;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!(out << text)) {
    throw InputError("cannot write '" + path + "'");
  }
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(std::string(what) + " must be a nonnegative integer, got '" +
                     text + "'");
  }
  return v;
}

void require_positive(std::size_t v, const char* what) {
  if (v == 0) {
    throw InputError(std::string(what) + " must be positive");
  }
}

Header base_header(const std::string& command, const GroupEngine& e) {
  return {{"tool", "cgw " + version()},
          {"command", command},
          {"group", e.descriptor().to_string()}};
}

// Cache parameters: the header minus the tool line, which the key carries
// separately, and minus the output format.
std::string cache_parameters(const Header& h) {
  std::string out;
  for (const auto& [k, v] : h) {
    if (k != "tool" && k != "format") {
      out += k + "=" + v + "\n";
    }
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto end = comma == std::string::npos ? text.size() : comma;
    auto first = text.find_first_not_of(' ', start);
    auto last = text.find_last_not_of(' ', end == 0 ? 0 : end - 1);
    if (first < end && last != std::string::npos && last >= first) {
      out.push_back(text.substr(first, last - first + 1));
    } else {
      throw InputError("empty entry in list '" + text + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

// Table-like commands default to csv, the others emit json only.
std::string check_format(const Options& o, bool csv_allowed) {
  std::string f = o.format.value_or(csv_allowed ? "csv" : "json");
  if (f == "json" || (csv_allowed && f == "csv")) {
    return f;
  }
  throw InputError("unsupported --format '" + f + "' for this command");
}

int cmd_table(GrowthKind kind, const std::string& name, const Options& o,
              Context& ctx) {
  const std::string format = check_format(o, true);
  require_positive(o.budget, "--budget");
  require_positive(o.pair_budget, "--pair-budget");
  EnginePtr e = build_engine(o.group);
  Header h = base_header(name, *e);
  h.emplace_back("radius", std::to_string(o.radius));
  h.emplace_back("budget", std::to_string(o.budget));
  std::optional<LetterSet> letters;
  if (!o.generators.empty()) {
    std::vector<Word> words;
    std::string canonical;
    for (const auto& w : split_list(o.generators)) {
      words.push_back(parse_word(w, e->generators()));
      canonical += (canonical.empty() ? "" : ",") + to_string(words.back());
    }
    letters = LetterSet::from_words(*e, words);
    h.emplace_back("generators", canonical);
  }
  if (kind != GrowthKind::gamma) {
    h.emplace_back("pair-budget", std::to_string(o.pair_budget));
    h.emplace_back("conjugator-radius", std::to_string(o.conjugator_radius));
  }
  h.emplace_back("format", format);

  GrowthOptions opts;
  opts.budget = o.budget;
  opts.threads = ctx.threads;
  opts.pair_budget = o.pair_budget;
  opts.conjugator_radius = o.conjugator_radius;

  GrowthTable t;
  std::string key;
  std::optional<std::string> hit;
  if (ctx.cache) {
    key = ctx.cache->key(e->descriptor().to_string(), name, cache_parameters(h));
    hit = ctx.cache->load(key);
  }
  if (hit) {
    t = table_from_json(*hit);
  } else {
    if (letters) {
      Ball ball = enumerate_ball(*e, *letters, o.radius,
                                 BallOptions{o.budget, ctx.threads});
      t = kind == GrowthKind::gamma  ? growth_table(*e, ball)
          : kind == GrowthKind::xi   ? conjugacy_growth_table(*e, ball, opts)
                                     : primitive_growth_table(*e, ball, opts);
      t.budget = o.budget;
    } else {
      t = kind == GrowthKind::gamma  ? growth_table(*e, o.radius, opts)
          : kind == GrowthKind::xi   ? conjugacy_growth_table(*e, o.radius, opts)
                                     : primitive_growth_table(*e, o.radius, opts);
    }
    if (ctx.cache) {
      ctx.cache->store(key, to_json(t));
    }
  }

  write_text(o.output, format == "json" ? to_json(t, h) : to_csv(t, h),
             ctx.out);
  if (!o.plot.empty()) {
    write_text(o.plot, plot_data(t, h), ctx.out);
    write_text(o.plot + ".ln", plot_log_data(t, h), ctx.out);
  }
  return kOk;
}

SampledFunction load_function(const std::string& source,
                              std::optional<std::size_t> samples) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    return function_from_csv(read_file(source),
                             std::filesystem::path(source).filename().string());
  }
  ReferenceSpec spec;
  try {
    spec = parse_reference(source);
  } catch (const InputError&) {
    throw InputError("'" + source +
                     "' is neither a readable CSV table nor a reference "
                     "function (poly(d), exp(a), nsq_log)");
  }
  if (!samples) {
    throw InputError("reference '" + source +
                     "' needs a sample count: give --samples or a CSV table "
                     "on the other side");
  }
  return reference_function(spec, *samples);
}

std::string file_identity(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    return source + " (sha256 " + sha256_hex(read_file(source)) + ")";
  }
  return source;
}

int cmd_compare(const Options& o, Context& ctx) {
  check_format(o, false);
  if (o.mode != "equiv" && o.mode != "preceq") {
    throw InputError("--mode must be equiv or preceq");
  }
  std::error_code ec;
  std::optional<std::size_t> samples = o.samples;
  SampledFunction f, g;
  bool f_file = std::filesystem::is_regular_file(o.f, ec);
  bool g_file = std::filesystem::is_regular_file(o.g, ec);
  if (f_file || !g_file) {
    f = load_function(o.f, samples);
    g = load_function(o.g, samples ? samples : std::optional(f.size()));
  } else {
    g = load_function(o.g, samples);
    f = load_function(o.f, samples ? samples : std::optional(g.size()));
  }
  Header h{{"tool", "cgw " + version()},
           {"command", "compare"},
           {"f", file_identity(o.f)},
           {"g", file_identity(o.g)},
           {"cmax", std::to_string(o.cmax)},
           {"mode", o.mode}};
  if (o.samples) {
    h.emplace_back("samples", std::to_string(*o.samples));
  }
  EquivVerdict v = o.mode == "equiv" ? equiv_verdict(f, g, o.cmax)
                                     : preceq_witness(f, g, o.cmax);
  write_text(o.output, to_json(v, h), ctx.out);
  if (!o.plot.empty()) {
    write_text(o.plot, plot_data(f, g, v.C > 0 ? v.C : o.cmax, h), ctx.out);
  }
  return kOk;
}

int cmd_check_sc(const Options& o, Context& ctx) {
  check_format(o, false);
  require_positive(o.piece_budget, "--budget");
  require_positive(o.distance_budget, "--distance-budget");
  EnginePtr e = build_engine(o.group);
  std::vector<Word> base;
  if (!o.words_file.empty()) {
    base = read_word_list(read_file(o.words_file));
  }
  for (const auto& w : o.words) {
    base.push_back(parse_word(w));
  }
  if (base.empty()) {
    throw InputError("check-sc needs relators via --words FILE or --word W");
  }
  RelativeAlphabet A(*e, o.letter_bound);
  for (const Word& w : base) {
    A.evaluate(w);
  }
  SymmetrizedSet S = SymmetrizedSet::symmetrize(base);
  SCParams p;
  p.eps = o.eps;
  p.mu = parse_rational(o.mu);
  p.lambda = parse_rational(o.lambda);
  p.c = o.c;
  p.rho = o.rho;
  validate(p);

  std::string relators;
  for (const Word& w : base) {
    relators += (relators.empty() ? "" : "; ") + to_string(w);
  }
  Header h = base_header("check-sc", *e);
  h.emplace_back("relators", relators);
  h.emplace_back("eps", std::to_string(p.eps));
  h.emplace_back("mu", to_string(p.mu));
  h.emplace_back("lambda", to_string(p.lambda));
  h.emplace_back("c", std::to_string(p.c));
  h.emplace_back("rho", std::to_string(p.rho));
  h.emplace_back("letter-bound", std::to_string(o.letter_bound));
  h.emplace_back("budget", std::to_string(o.piece_budget));
  h.emplace_back("distance-budget", std::to_string(o.distance_budget));

  std::string key;
  if (ctx.cache) {
    key = ctx.cache->key(e->descriptor().to_string(), "check-sc",
                         cache_parameters(h));
    if (auto hit = ctx.cache->load(key)) {
      write_text(o.output, *hit, ctx.out);
      return kOk;
    }
  }
  PieceOptions opts;
  opts.budget = o.piece_budget;
  opts.threads = ctx.threads;
  opts.distance_budget = o.distance_budget;
  std::string text = to_json(check_condition(A, S, p, opts), S, h);
  if (ctx.cache) {
    ctx.cache->store(key, text);
  }
  write_text(o.output, text, ctx.out);
  return kOk;
}

int cmd_hat_metric(const Options& o, Context& ctx) {
  check_format(o, false);
  require_positive(o.budget, "--budget");
  EnginePtr e = build_engine(o.group);
  Payload h1 = e->evaluate(parse_word(o.h1, e->generators()));
  Payload h2 = e->evaluate(parse_word(o.h2, e->generators()));
  HatMetric metric(*e, o.factor, o.radius, o.budget);
  HatMetricResult r = metric.distance(view(h1), view(h2));
  Header h = base_header("hat-metric", *e);
  h.emplace_back("factor", std::to_string(o.factor));
  h.emplace_back("h1", e->format(view(h1)));
  h.emplace_back("h2", e->format(view(h2)));
  h.emplace_back("radius", std::to_string(o.radius));
  h.emplace_back("budget", std::to_string(o.budget));
  write_text(o.output, to_json(*e, r, h), ctx.out);
  return kOk;
}

int cmd_translation(const Options& o, Context& ctx) {
  const std::string format = check_format(o, true);
  require_positive(o.budget, "--budget");
  EnginePtr e = build_engine(o.group);
  Payload g = e->evaluate(parse_word(o.word, e->generators()));
  TranslationEstimate t =
      translation_number_estimate(*e, view(g), o.radius, o.budget);
  Header h = base_header("translation", *e);
  h.emplace_back("word", e->format(view(g)));
  h.emplace_back("radius", std::to_string(o.radius));
  h.emplace_back("budget", std::to_string(o.budget));
  h.emplace_back("format", format);
  if (format == "json") {
    write_text(o.output, to_json(*e, t, h), ctx.out);
    return kOk;
  }
  std::string text = format_header(h) + "n,length\n";
  for (std::size_t n = 1; n <= t.lengths.size(); ++n) {
    text += std::to_string(n) + "," + std::to_string(t.lengths[n - 1]) + "\n";
  }
  write_text(o.output, text, ctx.out);
  return kOk;
}

int cmd_reduce(const Options& o, Context& ctx) {
  EnginePtr e = build_engine(o.group);
  Payload g = e->evaluate(parse_word(o.word, e->generators()));
  write_text(o.output, e->format(view(g)) + "\n", ctx.out);
  return kOk;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_plan(
    const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (text.empty()) {
    return out;
  }
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw InputError("bad exponent '" + std::string(s) + "' in --plan");
    }
    return v;
  };
  for (const auto& entry : split_list(text)) {
    auto colon = entry.find(':');
    if (colon == std::string::npos) {
      throw InputError("--plan entries have the form p:q, got '" + entry + "'");
    }
    std::string_view sv(entry);
    out.emplace_back(number(sv.substr(0, colon)), number(sv.substr(colon + 1)));
  }
  return out;
}

int cmd_gen_w(const Options& o, Context& ctx) {
  check_format(o, false);
  EnginePtr e = build_engine(o.group);
  Word x = o.x.empty() ? Word{} : parse_word(o.x, e->generators());
  WWord w = generate_W_word(*e, x, o.n, parse_plan(o.plan));
  Header h = base_header("gen-w", *e);
  h.emplace_back("n", std::to_string(o.n));
  h.emplace_back("x", o.x.empty() ? "1" : to_string(x));
  if (!o.plan.empty()) {
    h.emplace_back("plan", o.plan);
  }
  write_text(o.output, to_json(w, h), ctx.out);
  return kOk;
}

}  // namespace

std::string version() { return CGW_VERSION; }

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) {
    return std::string(v);
  }
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env) {
  Options o;
  CLI::App app{"Growth, conjugacy growth and small cancellation experiments"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_group) {
    auto* opt = sub->add_option("--group", o.group, "group expression");
    if (needs_group) {
      opt->required();
    }
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
    sub->add_option("--cache", o.cache, "cache directory");
    sub->add_option("-o,--output", o.output, "output file (default stdout)");
  };

  std::vector<std::pair<CLI::App*, std::function<int(Context&)>>> commands;

  auto add_table = [&](const char* name, GrowthKind kind, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, true);
    sub->add_option("--radius", o.radius, "largest n")->required();
    sub->add_option("--budget", o.budget, "ball size limit");
    sub->add_option("--format", o.format, "csv or json");
    sub->add_option("--plot", o.plot,
                    "write plot data here and ln values to <file>.ln");
    sub->add_option("--generators", o.generators,
                    "comma-separated words forming the generating set");
    if (kind != GrowthKind::gamma) {
      sub->add_option("--pair-budget", o.pair_budget,
                      "conjugation-test limit for bracketed tables");
      sub->add_option("--conjugator-radius", o.conjugator_radius,
                      "conjugator ball radius for bracketed tables");
    }
    commands.emplace_back(sub, [&o, kind, name](Context& ctx) {
      return cmd_table(kind, name, o, ctx);
    });
  };
  add_table("growth", GrowthKind::gamma, "growth function of the ball");
  add_table("conj-growth", GrowthKind::xi, "conjugacy growth function");
  add_table("prim-growth", GrowthKind::pi, "primitive conjugacy growth function");

  CLI::App* compare = app.add_subcommand("compare", "test f <= g or f ~ g");
  add_common(compare, false);
  compare->add_option("--f", o.f, "CSV table or reference function")->required();
  compare->add_option("--g", o.g, "CSV table or reference function")->required();
  compare->add_option("--cmax", o.cmax, "largest constant C")->required();
  compare->add_option("--mode", o.mode, "equiv or preceq");
  compare->add_option("--samples", o.samples,
                      "samples of a reference function without a table");
  compare->add_option("--format", o.format, "json");
  compare->add_option("--plot", o.plot, "write n f(n) g(Cn) here");
  commands.emplace_back(compare, [&o](Context& ctx) { return cmd_compare(o, ctx); });

  CLI::App* sc = app.add_subcommand("check-sc", "check the C and C1 conditions");
  add_common(sc, true);
  sc->add_option("--words", o.words_file, "file with one relator per line");
  sc->add_option("--word", o.words, "relator (repeatable)");
  sc->add_option("--eps", o.eps, "epsilon");
  sc->add_option("--mu", o.mu, "mu as p/q");
  sc->add_option("--lambda", o.lambda, "lambda as p/q");
  sc->add_option("--c", o.c, "additive constant c");
  sc->add_option("--rho", o.rho, "minimal relator length");
  sc->add_option("--letter-bound", o.letter_bound,
                 "factor word length of parabolic letters");
  sc->add_option("--budget", o.piece_budget, "piece search limit");
  sc->add_option("--distance-budget", o.distance_budget,
                 "distance search limit per subword");
  sc->add_option("--format", o.format, "json");
  commands.emplace_back(sc, [&o](Context& ctx) { return cmd_check_sc(o, ctx); });

  CLI::App* hat = app.add_subcommand("hat-metric", "relative distance in a factor");
  add_common(hat, true);
  hat->add_option("--factor", o.factor, "index of the factor H (0 or 1)");
  hat->add_option("--h1", o.h1, "first element of H")->required();
  hat->add_option("--h2", o.h2, "second element of H")->required();
  hat->add_option("--radius", o.radius, "search radius")->required();
  hat->add_option("--budget", o.budget, "search limit");
  hat->add_option("--format", o.format, "json");
  commands.emplace_back(hat, [&o](Context& ctx) { return cmd_hat_metric(o, ctx); });

  CLI::App* tr = app.add_subcommand("translation", "estimate |g^n| / n");
  add_common(tr, true);
  tr->add_option("--word", o.word, "the element g")->required();
  tr->add_option("--radius", o.radius, "largest n")->required();
  tr->add_option("--budget", o.budget, "word length search limit");
  tr->add_option("--format", o.format, "csv or json");
  commands.emplace_back(tr, [&o](Context& ctx) { return cmd_translation(o, ctx); });

  CLI::App* red = app.add_subcommand("reduce", "print the normal form of a word");
  add_common(red, true);
  red->add_option("--word", o.word, "word to reduce")->required();
  commands.emplace_back(red, [&o](Context& ctx) { return cmd_reduce(o, ctx); });

  CLI::App* gw = app.add_subcommand("gen-w", "build a W-word with its certificate");
  add_common(gw, true);
  gw->add_option("--n", o.n, "number of (a_i, b_i) pairs")->required();
  gw->add_option("--x", o.x, "leading generator (default none)");
  gw->add_option("--plan", o.plan, "exponents p:q per pair, comma-separated");
  gw->add_option("--format", o.format, "json");
  commands.emplace_back(gw, [&o](Context& ctx) { return cmd_gen_w(o, ctx); });

  std::vector<const char*> argv{"cgw"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    Context ctx{out, err, env, 1, std::nullopt};
    std::optional<std::string> threads_text =
        o.threads ? std::optional(std::to_string(*o.threads)) : env("CGW_THREADS");
    ctx.threads = threads_text ? parse_count(*threads_text, "thread count") : 1;
    std::optional<std::string> cache_dir = o.cache ? o.cache : env("CGW_CACHE");
    if (cache_dir && !cache_dir->empty()) {
      ctx.cache.emplace(*cache_dir, version(), err);
      if (!ctx.cache->enabled()) {
        ctx.cache.reset();
      }
    }
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) {
        return fn(ctx);
      }
    }
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace cgw::cli
