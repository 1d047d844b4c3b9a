#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "chardeg/alt_verifier.hpp"
#include "chardeg/degree_data.hpp"
#include "chardeg/exact_arith.hpp"
#include "chardeg/interval.hpp"
#include "chardeg/lie_type.hpp"
#include "chardeg/partitions.hpp"
#include "chardeg/structure_bounds.hpp"

#ifndef CHARDEG_DEFAULT_DATA_DIR
#define CHARDEG_DEFAULT_DATA_DIR ""
#endif

namespace chardeg::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
    case Status::inconclusive: return 3;
  }
  return 2;
}

namespace {

using nlohmann::json;
using chardeg::to_string;

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

Status from_certainty(Certainty c) {
  switch (c) {
    case Certainty::holds: return Status::pass;
    case Certainty::fails: return Status::fail;
    case Certainty::inconclusive: return Status::inconclusive;
  }
  return Status::error;
}

std::uint64_t precision_from_env() {
  const char* env = std::getenv("CHARDEG_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultIntervalDigits;
  const Natural d = parse_natural(env);
  if (d < 1 || d > kMaxIntervalDigits) {
    throw std::invalid_argument("CHARDEG_PRECISION must be in [1, " +
                                std::to_string(kMaxIntervalDigits) + "]");
  }
  return d.get_ui();
}

std::vector<Natural> parse_degree_list(const std::string& text) {
  // Reuse the table parser so "1^3" syntax behaves identically.
  return parse_table_line("cli\t\t" + text, 0).degrees;
}

struct Outcome {
  Status status = Status::pass;
  json payload = json::object();
  // Filled instead of payload for --jsonl and --csv.
  std::optional<std::vector<json>> lines;
  std::optional<std::string> text;
};

struct Context {
  std::string data_dir;
  bool data_dir_given = false;
  std::uint64_t digits = kDefaultIntervalDigits;
};

std::vector<DegreeTable> load_data(const Context& ctx) {
  if (ctx.data_dir.empty()) throw std::runtime_error("no data directory; pass --data DIR");
  return load_data_dir(ctx.data_dir);
}

const DegreeTable& find_table(const std::vector<DegreeTable>& tables, const std::string& name) {
  for (const DegreeTable& t : tables) {
    if (t.name == name) return t;
  }
  throw std::invalid_argument("no table named '" + name + "' in the data directory");
}

GroupSpec spec_from(const std::string& family, std::uint32_t rank, std::uint64_t q) {
  const GroupSpec spec = GroupSpec::make(parse_family(family), rank, q);
  if (auto reason = validate(spec)) {
    throw std::invalid_argument(spec.name() + " excluded: " + *reason);
  }
  return spec;
}

using Handler = std::function<Outcome(const Context&)>;

struct Registry {
  CLI::App& app;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  CLI::App* add(const std::string& name, const std::string& description, Handler h) {
    CLI::App* sub = app.add_subcommand(name, description);
    commands.emplace_back(sub, std::move(h));
    return sub;
  }
};

// Every option variable lives here so handlers can capture by reference.
struct Args {
  std::string partition;
  std::uint32_t m = 0;
  std::optional<std::uint64_t> size;
  std::uint64_t from = 7, to = 0, n = 0;
  bool best = false, jsonl = false, csv = false, constant = false;
  unsigned parallel = 1;
  std::uint64_t k = 0;
  std::optional<std::string> q_eval;
  std::string family;
  std::uint32_t rank = 0;
  std::uint64_t q = 0;
  std::vector<std::string> families;
  std::uint32_t rank_max = 20;
  std::uint64_t q_max = 32, exceptional_q_max = 0;
  std::string check = "thm21";
  std::string degrees, name;
  std::string x, y;
  std::uint64_t num = 259, den = 1000;
  std::string file, json_text;
  std::string rat_g, rat_gn, order_n, index;
  std::uint64_t d = 0;
  std::string p;
  std::uint64_t i = 0;
};

void register_partitions(Registry& r, Args& a) {
  auto* hook = r.add("hook", "hook product and degree of a partition", [&a](const Context&) {
    const Partition lambda = Partition::parse(a.partition);
    Outcome o;
    o.payload = {{"partition", lambda.to_string()},
                 {"n", lambda.size()},
                 {"H", to_string(hook_product(lambda))},
                 {"degree", to_string(degree(lambda))}};
    return o;
  });
  hook->add_option("--partition", a.partition, "e.g. \"3,2,2\" or \"7^7\"")->required();

  auto* deg = r.add("degree", "character degree n!/H of a partition", [&a](const Context&) {
    const Partition lambda = Partition::parse(a.partition);
    Outcome o;
    o.payload = {{"partition", lambda.to_string()},
                 {"n", lambda.size()},
                 {"degree", to_string(degree(lambda))}};
    return o;
  });
  deg->add_option("--partition", a.partition)->required();

  auto* conj = r.add("conjugate", "conjugate partition", [&a](const Context&) {
    const Partition lambda = Partition::parse(a.partition);
    Outcome o;
    o.payload = {{"partition", lambda.to_string()},
                 {"conjugate", conjugate(lambda).to_string()},
                 {"self_conjugate", is_self_conjugate(lambda)}};
    return o;
  });
  conj->add_option("--partition", a.partition)->required();

  auto* gamma = r.add("gamma", "members of Gamma_m", [&a](const Context&) {
    const std::vector<Partition> members =
        a.size ? gamma_of_size(a.m, *a.size) : enumerate_gamma(a.m);
    json list = json::array();
    for (const Partition& p : members) list.push_back(p.to_string());
    Outcome o;
    o.payload = {{"m", a.m}, {"count", members.size()}, {"members", list}};
    if (a.size) o.payload["size"] = *a.size;
    return o;
  });
  gamma->add_option("--m", a.m)->required();
  gamma->add_option("--size", a.size, "only members of this size");
}

void register_alternating(Registry& r, Args& a) {
  auto* prop42 = r.add("prop42", "certify alternating-group witnesses for n in [from, to]",
                       [&a](const Context&) {
    const std::uint64_t to = a.to == 0 ? a.from : a.to;
    if (a.from < 7 || to < a.from) throw std::invalid_argument("need 7 <= from <= to");
    const auto reports =
        certify_alternating_range(a.from, to, WitnessSearchOptions{a.best}, a.parallel);
    Outcome o;
    std::size_t failed = 0;
    json records = json::array();
    for (const WitnessReport& rep : reports) {
      if (!rep.passed) ++failed;
      records.push_back(to_json(rep));
    }
    o.status = from_bool(failed == 0);
    if (a.jsonl) {
      o.lines = std::vector<json>(records.begin(), records.end());
      o.lines->push_back({{"status", to_string(o.status)}, {"count", reports.size()},
                          {"failed", failed}});
    } else {
      o.payload = {{"from", a.from}, {"to", to}, {"count", reports.size()},
                   {"failed", failed}, {"records", records}};
    }
    return o;
  });
  prop42->add_option("--from", a.from)->capture_default_str();
  prop42->add_option("--to", a.to, "defaults to --from");
  prop42->add_flag("--best", a.best, "report the smallest-H passer");
  prop42->add_option("--parallel", a.parallel, "worker threads")->check(CLI::Range(1u, 256u));
  prop42->add_flag("--jsonl", a.jsonl, "one record per line");

  auto* l43 = r.add("lemma43", "Stirling lower bound at n, or the constant check",
                    [&a](const Context& ctx) {
    Outcome o;
    RefinedVerdict v{};
    if (a.constant) {
      v = refine_until_conclusive([](std::uint64_t d) { return check_stirling_constant(d); },
                                  ctx.digits);
      o.payload = {{"check", "constant"}};
    } else {
      const std::uint64_t n = a.n;
      v = refine_until_conclusive([n](std::uint64_t d) { return check_stirling_lower(n, d); },
                                  ctx.digits);
      o.payload = {{"check", "lower"}, {"n", n}};
    }
    o.status = from_certainty(v.verdict);
    o.payload["verdict"] = to_string(v.verdict);
    o.payload["digits"] = v.digits;
    return o;
  });
  auto* l43n = l43->add_option("--n", a.n, "n >= 15");
  auto* l43c = l43->add_flag("--constant", a.constant, "((2 pi)^13 / e^15)^(1/28) > 1.35");
  l43n->excludes(l43c);
  l43->callback([l43n, l43c] {
    if (l43n->count() == 0 && l43c->count() == 0) {
      throw CLI::RequiredError("lemma43 needs --n or --constant");
    }
  });

  auto* l45 = r.add("lemma45", "hook products in Gamma_m are below (m+1)^((m+1)^2)",
                    [&a](const Context&) {
    Outcome o;
    const bool ok = check_gamma_hook_upper(a.m);
    o.status = from_bool(ok);
    o.payload = {{"m", a.m}, {"holds", ok}};
    return o;
  });
  l45->add_option("--m", a.m)->required();

  auto* l46 = r.add("lemma46", "Gamma hook asymptotic at n", [&a](const Context& ctx) {
    const std::uint64_t n = a.n;
    const RefinedVerdict v = refine_until_conclusive(
        [n](std::uint64_t d) { return check_gamma_asymptotic(n, d); }, ctx.digits);
    Outcome o;
    o.status = from_certainty(v.verdict);
    o.payload = {{"n", n}, {"verdict", to_string(v.verdict)}, {"digits", v.digits}};
    return o;
  });
  l46->add_option("--n", a.n)->required();
}

void register_lie(Registry& r, Args& a) {
  auto* cyc = r.add("cyclotomic", "cyclotomic polynomial Phi_k", [&a](const Context&) {
    if (a.k == 0) throw std::invalid_argument("k must be >= 1");
    const IntPolynomial phi = cyclotomic(a.k);
    json coeffs = json::array();
    for (const Integer& c : phi.coefficients()) coeffs.push_back(to_string(c));
    Outcome o;
    o.payload = {{"k", a.k},
                 {"degree", phi.degree()},
                 {"polynomial", phi.to_string()},
                 {"coefficients", coeffs}};
    if (a.q_eval) {
      o.payload["q"] = *a.q_eval;
      o.payload["value"] = to_string(eval_poly(phi, parse_natural(*a.q_eval)));
    }
    return o;
  });
  cyc->add_option("--k", a.k)->required();
  cyc->add_option("--q", a.q_eval, "evaluate at q");

  auto add_spec_options = [&a](CLI::App* sub) {
    sub->add_option("--family", a.family, "linear, unitary, symplectic, orth-odd, "
                                          "orth-plus, orth-minus, 2B2, 3D4, G2, 2G2, F4, "
                                          "2F4, E6, 2E6, E7, E8")
        ->required();
    sub->add_option("--rank", a.rank, "n for classical families");
    sub->add_option("--q", a.q)->required();
  };

  add_spec_options(r.add("order", "order of a simple group of Lie type", [&a](const Context&) {
    const GroupSpec spec = spec_from(a.family, a.rank, a.q);
    Outcome o;
    o.payload = {{"spec", to_json(spec)}, {"order", to_string(order(spec))}};
    return o;
  }));

  add_spec_options(r.add("steinberg", "Steinberg degree", [&a](const Context&) {
    const GroupSpec spec = spec_from(a.family, a.rank, a.q);
    Outcome o;
    o.payload = {{"spec", to_json(spec)}, {"degree", to_string(steinberg_degree(spec))}};
    return o;
  }));

  add_spec_options(r.add("beta", "chosen character pair", [&a](const Context&) {
    const GroupSpec spec = spec_from(a.family, a.rank, a.q);
    const CharPair pair = beta_degree(spec);
    Outcome o;
    o.payload = {{"spec", to_json(spec)},
                 {"alpha", to_string(pair.alpha_degree)},
                 {"alpha_label", pair.alpha_label},
                 {"beta", to_string(pair.beta_degree)},
                 {"beta_label", pair.beta_label}};
    return o;
  }));

  add_spec_options(r.add("thm21", "alpha^14 > beta^14 |S| for one group", [&a](const Context&) {
    const RatioReport rep = check_root14(spec_from(a.family, a.rank, a.q));
    Outcome o;
    o.status = from_bool(rep.passed_root14);
    o.payload = to_json(rep);
    return o;
  }));

  add_spec_options(r.add("lemma61", "alpha/beta >= 16/5 for one group", [&a](const Context&) {
    const RatioReport rep = check_ratio_16_5(spec_from(a.family, a.rank, a.q));
    Outcome o;
    o.status = from_bool(rep.passed_16_5);
    o.payload = to_json(rep);
    return o;
  }));

  auto* sw = r.add("sweep", "run a ratio check over a family/rank/q grid", [&a](const Context&) {
    SweepOptions opts;
    if (a.families.empty()) {
      opts.families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    } else {
      for (const std::string& f : a.families) opts.families.push_back(parse_family(f));
    }
    opts.rank_max = a.rank_max;
    opts.q_max = a.q_max;
    opts.exceptional_q_max = a.exceptional_q_max;
    if (a.check == "thm21") {
      opts.check = SweepCheck::root14;
    } else if (a.check == "lemma61") {
      opts.check = SweepCheck::ratio_16_5;
    } else {
      throw std::invalid_argument("--check must be thm21 or lemma61");
    }
    opts.workers = a.parallel;
    const SweepResult res = sweep(opts);

    const bool root14 = opts.check == SweepCheck::root14;
    std::size_t failed = 0;
    for (const RatioReport& rep : res.reports) {
      if (!(root14 ? rep.passed_root14 : rep.passed_16_5)) ++failed;
    }
    Outcome o;
    o.status = from_bool(failed == 0);
    const json summary = {{"status", to_string(o.status)},
                          {"check", a.check},
                          {"checked", res.reports.size()},
                          {"excluded", res.excluded.size()},
                          {"failed", failed}};
    if (a.csv) {
      std::string text = csv_header() + "\n";
      for (const RatioReport& rep : res.reports) text += to_csv(rep) + "\n";
      o.text = std::move(text);
    } else if (a.jsonl) {
      o.lines.emplace();
      for (const RatioReport& rep : res.reports) o.lines->push_back(to_json(rep));
      for (const Exclusion& e : res.excluded) o.lines->push_back(to_json(e));
      o.lines->push_back(summary);
    } else {
      json reports = json::array();
      for (const RatioReport& rep : res.reports) reports.push_back(to_json(rep));
      json excluded = json::array();
      for (const Exclusion& e : res.excluded) excluded.push_back(to_json(e));
      o.payload = summary;
      o.payload["reports"] = reports;
      o.payload["exclusions"] = excluded;
    }
    return o;
  });
  sw->add_option("--families", a.families, "default: all")->delimiter(',');
  sw->add_option("--rank-max", a.rank_max)->capture_default_str();
  sw->add_option("--q-max", a.q_max)->capture_default_str();
  sw->add_option("--exceptional-q-max", a.exceptional_q_max, "default: --q-max");
  sw->add_option("--check", a.check, "thm21 or lemma61")->capture_default_str();
  sw->add_option("--parallel", a.parallel)->check(CLI::Range(1u, 256u));
  auto* csv = sw->add_flag("--csv", a.csv);
  auto* jl = sw->add_flag("--jsonl", a.jsonl);
  csv->excludes(jl);
}

void register_data(Registry& r, Args& a) {
  auto* rt = r.add("rat", "b(G)/c(G) for a degree list or a named table",
                   [&a](const Context& ctx) {
    DegreeTable table;
    if (!a.name.empty()) {
      table = find_table(load_data(ctx), a.name);
    } else {
      table.name = "cli";
      table.degrees = parse_degree_list(a.degrees);
      table.validate();
    }
    const auto c = min_nonlinear_degree(table);
    Outcome o;
    o.payload = {{"rat", to_string(rat(table))},
                 {"b", to_string(max_degree(table))},
                 {"c", c ? json(to_string(*c)) : json(nullptr)}};
    if (!a.name.empty()) o.payload["name"] = a.name;
    return o;
  });
  auto* deg = rt->add_option("--degrees", a.degrees, "e.g. \"1,20,35^3,64\"");
  auto* nm = rt->add_option("--name", a.name, "table name in --data");
  deg->excludes(nm);
  rt->callback([deg, nm] {
    if (deg->count() == 0 && nm->count() == 0) throw CLI::RequiredError("--degrees or --name");
  });

  auto* sc = r.add("sporadic-check", "alpha^14 > beta^14 |S| for every table with a pair",
                   [&a](const Context& ctx) {
    const auto tables = load_data(ctx);
    json records = json::array();
    std::size_t passed = 0, bad = 0, unchecked = 0;
    for (const DegreeTable& t : tables) {
      if (!a.name.empty() && t.name != a.name) continue;
      const PairReport rep = check_sporadic_pair(t);
      switch (rep.status) {
        case PairStatus::passed: ++passed; break;
        case PairStatus::unchecked: ++unchecked; break;
        default: ++bad; break;
      }
      records.push_back(to_json(rep));
    }
    if (!a.name.empty() && records.empty()) {
      throw std::invalid_argument("no table named '" + a.name + "'");
    }
    Outcome o;
    o.status = from_bool(bad == 0);
    o.payload = {{"passed", passed}, {"failed", bad}, {"unchecked", unchecked},
                 {"records", records}};
    return o;
  });
  sc->add_option("--name", a.name, "check one table");

  auto* ob = r.add("out-bound", "x <= y^(num/den); with --name, |Out(S)| <= |S|^(num/den)",
                   [&a](const Context& ctx) {
    Natural x, y;
    if (!a.name.empty()) {
      const auto tables = load_data(ctx);
      const DegreeTable& t = find_table(tables, a.name);
      if (!t.out_order || !t.order) throw std::invalid_argument(a.name + ": needs order and out_order");
      x = *t.out_order;
      y = *t.order;
    } else {
      if (a.x.empty() || a.y.empty()) throw std::invalid_argument("need --x and --y, or --name");
      x = parse_natural(a.x);
      y = parse_natural(a.y);
    }
    const bool ok = check_exponent_bound(x, y, a.num, a.den);
    Outcome o;
    o.status = from_bool(ok);
    o.payload = {{"x", to_string(x)}, {"y", to_string(y)},
                 {"exponent", std::to_string(a.num) + "/" + std::to_string(a.den)},
                 {"holds", ok}};
    if (!a.name.empty()) o.payload["name"] = a.name;
    return o;
  });
  ob->add_option("--x", a.x);
  ob->add_option("--y", a.y);
  ob->add_option("--name", a.name);
  ob->add_option("--num", a.num)->capture_default_str();
  ob->add_option("--den", a.den)->capture_default_str()->check(CLI::PositiveNumber);

  auto* vd = r.add("validate-data", "parse and audit every table in --data",
                   [](const Context& ctx) {
    const auto tables = load_data(ctx);
    const auto issues = audit_tables(tables);
    json list = json::array();
    for (const DataIssue& i : issues) list.push_back({{"name", i.name}, {"problem", i.problem}});
    std::size_t complete = 0;
    for (const DegreeTable& t : tables) complete += t.degrees_complete ? 1 : 0;
    Outcome o;
    o.status = from_bool(issues.empty());
    o.payload = {{"tables", tables.size()}, {"complete", complete}, {"issues", list}};
    return o;
  });
  (void)vd;
}

void register_structure(Registry& r, Args& a) {
  auto* cs = r.add("chiefseries-bound", "product of |S|^k over non-PSL_2 nonabelian factors",
                   [&a](const Context&) {
    json j;
    if (!a.file.empty()) {
      std::ifstream in(a.file);
      if (!in) throw std::runtime_error("cannot open " + a.file);
      j = json::parse(in);
    } else {
      j = json::parse(a.json_text);
    }
    const ChiefSeries series = chief_series_from_json(j);
    Outcome o;
    o.payload = {{"series", to_json(series)},
                 {"rat14_lower_bound", to_string(rat14_lower_bound(series))}};
    return o;
  });
  auto* f = cs->add_option("--file", a.file, "chief series JSON file");
  auto* js = cs->add_option("--json", a.json_text, "chief series JSON text");
  f->excludes(js);
  cs->callback([f, js] {
    if (f->count() == 0 && js->count() == 0) throw CLI::RequiredError("--file or --json");
  });

  auto* p23 = r.add("prop23", "rat(G)^14 >= rat(G/N)^14 |N|", [&a](const Context&) {
    const bool ok = chief_factor_ratio_check(parse_rational(a.rat_g), parse_rational(a.rat_gn),
                                             parse_natural(a.order_n));
    Outcome o;
    o.status = from_bool(ok);
    o.payload = {{"rat_g", to_string(parse_rational(a.rat_g))},
                 {"rat_gn", to_string(parse_rational(a.rat_gn))},
                 {"order_n", a.order_n},
                 {"holds", ok}};
    return o;
  });
  p23->add_option("--rat-g", a.rat_g)->required();
  p23->add_option("--rat-gn", a.rat_gn)->required();
  p23->add_option("--order-n", a.order_n)->required();

  auto* mb = r.add("maroti", "floor((d!)^((n-1)/(d-1)))", [&a](const Context&) {
    Outcome o;
    o.payload = {{"n", a.n}, {"d", a.d}, {"bound", to_string(maroti_bound(a.n, a.d))}};
    return o;
  });
  mb->add_option("--n", a.n)->required();
  mb->add_option("--d", a.d)->required();

  auto* p32 = r.add("prop32", "floor(|N|^1.43)", [&a](const Context&) {
    Outcome o;
    o.payload = {{"order_n", a.order_n},
                 {"bound", to_string(radical_index_bound(parse_natural(a.order_n)))}};
    return o;
  });
  p32->add_option("--order-n", a.order_n)->required();

  auto* tb = r.add("thmB", "index <= rat(G)^21", [&a](const Context&) {
    const bool ok = radical_index_check(parse_rational(a.rat_g), parse_natural(a.index));
    Outcome o;
    o.status = from_bool(ok);
    o.payload = {{"rat_g", to_string(parse_rational(a.rat_g))},
                 {"index", a.index},
                 {"holds", ok}};
    return o;
  });
  tb->add_option("--rat-g", a.rat_g)->required();
  tb->add_option("--index", a.index)->required();

  auto table_payload = [](const DegreeTable& t) {
    json j = to_json(t);
    j["rat"] = to_string(rat(t));
    return j;
  };

  auto* fe = r.add("example-frobenius", "index-m subgroup of F_p : F_p^*",
                   [&a, table_payload](const Context&) {
    const Natural p = a.p.empty() ? smallest_prime_one_mod(a.m) : parse_natural(a.p);
    Outcome o;
    o.payload = table_payload(frobenius_example(p, a.m));
    return o;
  });
  fe->add_option("--m", a.m)->required();
  fe->add_option("--p", a.p, "prime with m | p - 1; default: the smallest");

  auto* ee = r.add("example-extraspecial", "extraspecial-by-cyclic example",
                   [&a, table_payload](const Context&) {
    Outcome o;
    o.payload = table_payload(extraspecial_example(parse_natural(a.p), a.i));
    return o;
  });
  ee->add_option("--p", a.p)->required();
  ee->add_option("--i", a.i)->required();
}

std::string render(const Outcome& o, Status status) {
  if (o.text) return *o.text;
  if (o.lines) {
    std::string out;
    for (const json& line : *o.lines) out += line.dump() + "\n";
    return out;
  }
  json payload = o.payload;
  payload["status"] = to_string(status);
  return payload.dump(2) + "\n";
}

CommandResult finish(Status status, json payload, std::string output) {
  return {status, std::move(payload), exit_code_for(status), std::move(output)};
}

CommandResult error_result(const std::string& message, std::ostream& diag) {
  diag << "error: " << message << "\n";
  json payload = {{"status", "error"}, {"error", message}};
  std::string out = payload.dump(2) + "\n";
  return finish(Status::error, std::move(payload), std::move(out));
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv, std::ostream& diag) {
  CLI::App app{"Exact character-degree inequality checks for finite simple groups", "chardeg"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  Args args;
  app.add_option("--data", ctx.data_dir, "directory of degree tables (*.tsv, *.json)");

  Registry registry{app, {}};
  register_partitions(registry, args);
  register_alternating(registry, args);
  register_lie(registry, args);
  register_data(registry, args);
  register_structure(registry, args);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& s : argv) raw.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    const std::string help = app.help();
    return finish(Status::pass, json{{"status", "pass"}}, help);
  } catch (const CLI::CallForAllHelp&) {
    const std::string help = app.help("", CLI::AppFormatMode::All);
    return finish(Status::pass, json{{"status", "pass"}}, help);
  } catch (const CLI::ParseError& e) {
    diag << app.help();
    return error_result(e.what(), diag);
  }

  try {
    ctx.data_dir_given = !ctx.data_dir.empty();
    if (!ctx.data_dir_given) {
      if (const char* env = std::getenv("CHARDEG_DATA_DIR"); env != nullptr && *env != '\0') {
        ctx.data_dir = env;
      } else {
        ctx.data_dir = CHARDEG_DEFAULT_DATA_DIR;
      }
    }
    ctx.digits = precision_from_env();
    for (const auto& [sub, handler] : registry.commands) {
      if (!sub->parsed()) continue;
      Outcome o = handler(ctx);
      const std::string out = render(o, o.status);
      json payload = o.lines ? json(*o.lines) : o.payload;
      if (!o.lines && !o.text) payload["status"] = to_string(o.status);
      return finish(o.status, std::move(payload), out);
    }
    return error_result("no subcommand", diag);
  } catch (const std::exception& e) {
    return error_result(e.what(), diag);
  }
}

}  // namespace chardeg::cli
