#include "supercong/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace supercong::harness {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids{"s_order",  "dwork", "power_coeff", "harmonic",   "wolstenholme_binomial",
                                            "wolstenholme", "main",  "reduction",   "fractional", "jk"};
  return ids;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

Rational parse_scalar(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JobError(what + ": " + e.what());
    }
  }
  throw JobError(what + ": expected an integer or a \"num/den\" string");
}

unsigned get_unsigned(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw JobError(what + ": expected a non-negative integer");
  return j.get<unsigned>();
}

std::vector<unsigned> parse_index_list(const json& j, const std::string& what) {
  std::vector<unsigned> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(get_unsigned(v, what));
  } else if (j.is_object()) {
    if (!j.contains("from") || !j.contains("to")) throw JobError(what + ": range needs \"from\" and \"to\"");
    unsigned lo = get_unsigned(j["from"], what), hi = get_unsigned(j["to"], what);
    for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
  } else if (j.is_number_integer()) {
    out.push_back(get_unsigned(j, what));
  } else {
    throw JobError(what + ": expected a list, a range or an integer");
  }
  if (std::count(out.begin(), out.end(), 0u)) throw JobError(what + ": indices start at 1");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CycloElem> parse_element_list(const json& j, unsigned conductor, const std::string& what) {
  if (!j.is_array()) throw JobError(what + ": expected a list");
  std::vector<CycloElem> out;
  for (const auto& v : j) out.push_back(parse_element(v, conductor));
  return out;
}

SeriesSpec parse_series(const json& j) {
  if (!j.is_object()) throw JobError("series: expected an object");
  SeriesSpec s;
  const std::string kind = j.value("kind", "");
  s.conductor = j.contains("conductor") ? get_unsigned(j["conductor"], "series.conductor") : 1;
  if (s.conductor == 0) throw JobError("series.conductor must be >= 1");
  if (kind == "rational") {
    s.kind = SeriesSpec::Kind::Rational;
    if (!j.contains("numerator") || !j.contains("denominator"))
      throw JobError("rational series needs \"numerator\" and \"denominator\"");
    s.numerator = parse_element_list(j["numerator"], s.conductor, "series.numerator");
    s.denominator = parse_element_list(j["denominator"], s.conductor, "series.denominator");
    if (s.denominator.empty() || s.denominator.front().is_zero())
      throw JobError("series.denominator needs a nonzero constant term");
  } else if (kind == "periodic") {
    s.kind = SeriesSpec::Kind::Periodic;
    if (!j.contains("values")) throw JobError("periodic series needs \"values\"");
    s.values = parse_element_list(j["values"], s.conductor, "series.values");
    if (s.values.empty()) throw JobError("series.values must not be empty");
  } else if (kind == "coeffs") {
    s.kind = SeriesSpec::Kind::Coeffs;
    if (!j.contains("coeffs")) throw JobError("coeffs series needs \"coeffs\"");
    s.values = parse_element_list(j["coeffs"], s.conductor, "series.coeffs");
  } else {
    throw JobError("series.kind must be \"rational\", \"periodic\" or \"coeffs\"");
  }
  return s;
}

FramingParams parse_framing(const json& j) {
  if (!j.is_object()) throw JobError("framing: expected an object");
  FramingParams f;
  const std::string sign = j.value("sign", "+");
  if (sign == "+")
    f.sign = Sign::Plus;
  else if (sign == "-")
    f.sign = Sign::Minus;
  else
    throw JobError("framing.sign must be \"+\" or \"-\"");
  f.nu = j.contains("nu") ? parse_scalar(j["nu"], "framing.nu") : Rational(1);
  if (j.contains("sigma")) f.sigma = get_unsigned(j["sigma"], "framing.sigma");
  if (j.contains("rho")) f.rho = get_unsigned(j["rho"], "framing.rho");
  if (j.contains("weight")) f.weight = get_unsigned(j["weight"], "framing.weight");
  try {
    validate_fractional(f);
  } catch (const std::invalid_argument& e) {
    throw JobError(std::string("framing: ") + e.what());
  }
  return f;
}

}  // namespace

CycloElem parse_element(const json& j, unsigned conductor) {
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw JobError("cyclotomic element needs \"coeffs\"");
    unsigned N = j.contains("conductor") ? get_unsigned(j["conductor"], "element.conductor") : conductor;
    if (N != conductor && N != 1)
      throw JobError("element conductor " + std::to_string(N) + " does not match " + std::to_string(conductor));
    std::vector<Rational> c;
    for (const auto& v : j["coeffs"]) c.push_back(parse_scalar(v, "element coefficient"));
    if (N == 1 && conductor != 1) {
      if (c.size() > 1) throw JobError("conductor-1 element must be rational");
      return CycloElem(conductor, c.empty() ? Rational(0) : c[0]);
    }
    return CycloElem(conductor, std::move(c));
  }
  return CycloElem(conductor, parse_scalar(j, "element"));
}

json element_to_json(const CycloElem& a) {
  if (a.conductor() == 1) return to_string(a.rational_part());
  json c = json::array();
  for (const auto& x : a.coeffs()) c.push_back(to_string(x));
  return json{{"conductor", a.conductor()}, {"coeffs", c}};
}

Job parse_job(const json& j) {
  if (!j.is_object()) throw JobError("job must be a JSON object");
  Job job;
  job.raw = j;
  if (j.contains("schema") && j["schema"] != kJobSchema)
    throw JobError("unsupported job schema " + j["schema"].dump());
  if (j.contains("series")) job.series = parse_series(j["series"]);
  if (j.contains("truncation")) job.truncation = get_unsigned(j["truncation"], "truncation");
  if (j.contains("framing")) {
    job.framing = parse_framing(j["framing"]);
    job.has_framing = true;
  }
  if (j.contains("primes")) {
    for (const auto& p : j["primes"]) {
      unsigned long v = get_unsigned(p, "primes");
      if (!is_prime(v)) throw JobError("primes: " + std::to_string(v) + " is not prime");
      job.primes.push_back(v);
    }
  }
  if (j.contains("precision")) {
    const auto& pr = j["precision"];
    if (pr.is_string() && pr.get<std::string>() == "auto") {
      job.precision.reset();
    } else {
      unsigned M = get_unsigned(pr, "precision");
      if (M < 1) throw JobError("precision must be >= 1");
      job.precision = M;
    }
  }
  if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty())
    throw JobError("job needs a nonempty \"checks\" list");
  for (const auto& c : j["checks"]) {
    if (!c.is_string()) throw JobError("checks: expected strings");
    std::string id = c.get<std::string>();
    const auto& ids = known_checks();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw JobError("unknown check \"" + id + "\"");
    job.checks.push_back(id);
  }
  if (j.contains("n")) job.n = parse_index_list(j["n"], "n");
  if (j.contains("pairs")) {
    for (const auto& pr : j["pairs"]) {
      if (!pr.is_array() || pr.size() != 2) throw JobError("pairs: expected [m, r] entries");
      job.pairs.emplace_back(get_unsigned(pr[0], "pairs"), get_unsigned(pr[1], "pairs"));
    }
  }
  if (j.contains("pairs_limit")) job.pairs_limit = get_unsigned(j["pairs_limit"], "pairs_limit");
  if (j.contains("s")) job.s = get_unsigned(j["s"], "s");
  if (j.contains("m_max")) job.m_max = get_unsigned(j["m_max"], "m_max");
  if (j.contains("power_n"))
    for (unsigned v : parse_index_list(j["power_n"], "power_n")) job.power_n.push_back(v);
  if (j.contains("a_max")) job.a_max = get_unsigned(j["a_max"], "a_max");
  if (j.contains("b_min")) job.b_min = get_unsigned(j["b_min"], "b_min");
  if (j.contains("r")) {
    if (j["r"].is_number_integer()) {
      job.r.clear();
      for (unsigned v = 1; v <= get_unsigned(j["r"], "r"); ++v) job.r.push_back(v);
    } else {
      job.r = parse_index_list(j["r"], "r");
    }
  }
  if (j.contains("all_factors")) job.all_factors = j["all_factors"].get<bool>();
  if (j.contains("horizon")) job.horizon = get_unsigned(j["horizon"], "horizon");
  if (job.horizon < 2) throw JobError("horizon must be >= 2");

  static const std::set<std::string> needs_series{"s_order", "dwork", "power_coeff", "wolstenholme",
                                                  "main",    "reduction", "fractional"};
  static const std::set<std::string> needs_n{"harmonic", "wolstenholme", "main", "reduction", "fractional"};
  for (const auto& c : job.checks) {
    auto require = [&](bool ok, const char* what) {
      if (!ok) throw JobError("check \"" + c + "\" needs " + what);
    };
    require(!needs_series.count(c) || job.series.has_value(), "a series");
    require(!job.primes.empty(), "primes");
    require(!needs_n.count(c) || !job.n.empty(), "\"n\"");
    require(c != "power_coeff" || !job.power_n.empty(), "\"power_n\"");
    require(c != "s_order" || !job.pairs.empty() || job.pairs_limit > 0, "\"pairs\" or \"pairs_limit\"");
  }
  return job;
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JobError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw JobError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_job(j);
}

// ---------------------------------------------------------------------------
// series

Series series_from_spec(const SeriesSpec& spec, unsigned T) {
  const unsigned N = spec.conductor;
  Series s(N, T);
  switch (spec.kind) {
    case SeriesSpec::Kind::Rational: {
      // c_n = (P_n - sum_{k>=1} Q_k c_{n-k}) / Q_0
      const CycloElem q0inv = spec.denominator.front().inverse();
      for (unsigned n = 0; n <= T; ++n) {
        CycloElem acc = n < spec.numerator.size() ? spec.numerator[n] : CycloElem(N);
        for (unsigned k = 1; k <= n && k < spec.denominator.size(); ++k)
          if (!spec.denominator[k].is_zero()) acc -= spec.denominator[k] * s[n - k];
        s.set(n, acc * q0inv);
      }
      break;
    }
    case SeriesSpec::Kind::Periodic: {
      PeriodicSeq seq(spec.values);
      s = seq.to_series(T);
      break;
    }
    case SeriesSpec::Kind::Coeffs: {
      if (T > spec.values.size())
        throw JobError("explicit coefficients end at " + std::to_string(spec.values.size()) + ", need " +
                       std::to_string(T));
      for (unsigned n = 1; n <= T; ++n) s.set(n, spec.values[n - 1]);
      break;
    }
  }
  return s;
}

unsigned detect_period(const std::vector<CycloElem>& coeffs) {
  const std::size_t H = coeffs.size();
  for (std::size_t N = 1; 2 * N <= H; ++N) {
    bool ok = true;
    for (std::size_t k = 0; k + N < H && ok; ++k) ok = coeffs[k + N] == coeffs[k];
    if (ok) return static_cast<unsigned>(N);
  }
  throw std::domain_error("not periodic within horizon " + std::to_string(H));
}

// ---------------------------------------------------------------------------
// run

namespace {

using UnitFn = std::function<std::vector<CongruenceReport>(const LocalContextPtr&)>;

struct Unit {
  std::string check_id;
  unsigned long p = 0;  // 0: exact rational check, no context
  int bound = 0;
  Params params;  // identification for skip records
  UnitFn fn;
};

int ord(unsigned long n, unsigned long p) { return ord_p(static_cast<long long>(n), p); }

std::string str(unsigned long v) { return std::to_string(v); }

struct Prepared {
  Series V{1, 0};
  bool has_series = false;
  unsigned field_conductor = 1;
  std::optional<unsigned> period;
  std::string period_error;
  std::optional<PeriodicSeq> periodic;
  Series scan_seq{1, 0};
};

unsigned needed_truncation(const Job& job) {
  unsigned T = job.truncation;
  const FramingParams& f = job.framing;
  for (const auto& c : job.checks) {
    for (unsigned long p : job.primes) {
      for (unsigned n : job.n) {
        const unsigned long pn = p * n;
        if (c == "main" || c == "reduction") T = std::max<unsigned long>(T, pn);
        if (c == "fractional" && pn % f.rho == 0) T = std::max<unsigned long>(T, f.sigma * (pn / f.rho));
      }
    }
    if (c == "dwork" && job.truncation == 0) T = std::max(T, 32u);
    if (c == "power_coeff") T = std::max(T, job.m_max);
  }
  return T;
}

std::vector<std::pair<unsigned, unsigned>> scan_pairs(const Job& job, unsigned long p) {
  if (!job.pairs.empty() || job.pairs_limit == 0) return job.pairs;
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned r = 1;; ++r) {
    unsigned long pr = ipow(p, r).get_ui();
    if (pr > job.pairs_limit) break;
    for (unsigned m = 1; m * pr <= job.pairs_limit; ++m) out.emplace_back(m, r);
  }
  return out;
}

unsigned scan_length(const Job& job) {
  unsigned L = 0;
  for (unsigned long p : job.primes)
    for (auto [m, r] : scan_pairs(job, p)) L = std::max<unsigned long>(L, m * ipow(p, r).get_ui());
  return L;
}

Prepared prepare(const Job& job) {
  Prepared pr;
  if (!job.series) return pr;
  const SeriesSpec& spec = *job.series;
  pr.has_series = true;
  pr.field_conductor = spec.conductor;

  const bool scan = std::count(job.checks.begin(), job.checks.end(), "s_order") > 0;
  const unsigned L = scan ? scan_length(job) : 0;
  const FramingParams& f = job.framing;
  unsigned T = std::max(needed_truncation(job), static_cast<unsigned>(
                                                     static_cast<unsigned long>(f.sigma) * L / f.rho + 1));
  unsigned H = job.horizon;
  if (spec.kind == SeriesSpec::Kind::Coeffs) H = std::min<unsigned>(H, static_cast<unsigned>(spec.values.size()));
  T = std::max(T, H);
  if (spec.kind == SeriesSpec::Kind::Coeffs && T > spec.values.size()) {
    if (needed_truncation(job) > spec.values.size())
      throw JobError("explicit coefficients end at " + std::to_string(spec.values.size()) +
                     " but the checks need truncation " + std::to_string(needed_truncation(job)));
    T = static_cast<unsigned>(spec.values.size());
  }
  pr.V = series_from_spec(spec, T);

  if (spec.kind == SeriesSpec::Kind::Periodic) {
    pr.periodic.emplace(spec.values);
    pr.period = pr.periodic->period();
  } else {
    std::vector<CycloElem> head(pr.V.coeffs().begin() + 1, pr.V.coeffs().begin() + 1 + H);
    try {
      pr.period = detect_period(head);
      head.resize(*pr.period);
      pr.periodic.emplace(head);
    } catch (const std::domain_error& e) {
      pr.period_error = e.what();
    }
  }

  if (scan && L > 0) {
    const bool plain = !job.has_framing || (f.nu == 0 && f.sigma == 1 && f.rho == 1);
    if (plain) {
      pr.scan_seq = pr.V.truncated(L);
    } else if (f.sigma == 1 && f.rho == 1 && f.weight == 0) {
      pr.scan_seq = frame_by_formula(f, pr.V, L);
    } else {
      pr.scan_seq = fractional_frame(f, pr.V, L);
    }
  }
  return pr;
}

std::vector<Unit> make_units(const Job& job, const Prepared& pr) {
  std::vector<Unit> units;
  const FramingParams& f = job.framing;
  auto need_period = [&](const std::string& id, const Params& ps) -> std::optional<Unit> {
    if (pr.period) return std::nullopt;
    Unit u{id, 0, 0, ps, nullptr};
    std::string msg = "period unknown: " + pr.period_error;
    u.fn = [id, ps, msg](const LocalContextPtr&) { return std::vector{invalid_report(id, ps, msg)}; };
    return u;
  };
  const Series* V = &pr.V;

  for (const auto& c : job.checks) {
    if (c == "jk") {
      for (unsigned long p : job.primes)
        for (unsigned a = 1; a <= job.a_max; ++a)
          for (unsigned b = job.b_min; b <= a; ++b)
            for (unsigned r : job.r)
              units.push_back({c, 0, 0, {}, [=](const LocalContextPtr&) {
                                 return std::vector{jk_check(a, b, p, r)};
                               }});
    } else if (c == "harmonic") {
      for (unsigned long p : job.primes)
        for (unsigned n : job.n)
          units.push_back({c, 0, 0, {}, [=](const LocalContextPtr&) { return harmonic_bounds(p, n); }});
    } else if (c == "wolstenholme_binomial") {
      for (unsigned long p : job.primes)
        units.push_back({c, 0, 0, {}, [=](const LocalContextPtr&) { return wolstenholme_binomial(p); }});
    } else if (c == "wolstenholme") {
      for (unsigned long p : job.primes)
        for (unsigned n : job.n) {
          Params ps{{"p", str(p)}, {"n", str(n)}};
          if (auto u = need_period(c, ps)) {
            units.push_back(*u);
            continue;
          }
          const PeriodicSeq* seq = &*pr.periodic;
          units.push_back({c, p, wolstenholme_bound(p, n, *pr.period, false), ps,
                           [=](const LocalContextPtr& ctx) { return std::vector{wolstenholme_general(*seq, ctx, n)}; }});
        }
    } else if (c == "main" || c == "reduction" || c == "fractional") {
      for (unsigned long p : job.primes)
        for (unsigned n : job.n) {
          Params ps{{"p", str(p)}, {"n", str(n)}, {"nu", to_string(f.nu)}};
          if (auto u = need_period(c, ps)) {
            units.push_back(*u);
            continue;
          }
          const unsigned N = *pr.period;
          const bool coprime = N % p != 0;
          if (c == "main") {
            units.push_back({c, p, coprime ? main_theorem_bound(p, n, N) : 0, ps, [=](const LocalContextPtr& ctx) {
                               return std::vector{main_theorem_check(*V, N, f, ctx, n)};
                             }});
          } else if (c == "reduction") {
            units.push_back({c, p, reduction_bound(p, n), ps, [=](const LocalContextPtr& ctx) {
                               return std::vector{reduction_identity_check(*V, f.nu, ctx, n),
                                                  reduction_lemma_check(*V, f.nu, ctx, n)};
                             }});
          } else {
            units.push_back({c, p, coprime ? fractional_bound(p, n, f.rho, N) : 0, ps,
                             [=](const LocalContextPtr& ctx) {
                               return std::vector{fractional_theorem_check(f, *V, N, ctx, n)};
                             }});
          }
        }
    } else if (c == "s_order") {
      const Series* A = &pr.scan_seq;
      const unsigned s = job.s;
      for (unsigned long p : job.primes) {
        auto pairs = scan_pairs(job, p);
        int bound = 0;
        for (auto [m, r] : pairs) bound = std::max(bound, static_cast<int>(s * r));
        units.push_back({c, p, bound, {{"p", str(p)}, {"s", str(s)}},
                         [=](const LocalContextPtr& ctx) { return s_order_scan(*A, s, ctx, pairs); }});
      }
    } else if (c == "dwork") {
      const unsigned T = job.truncation ? job.truncation : 32;
      for (unsigned long p : job.primes)
        units.push_back({c, p, 1, {{"p", str(p)}, {"T", str(T)}},
                         [=](const LocalContextPtr& ctx) { return dwork_checks(*V, ctx, T); }});
    } else if (c == "power_coeff") {
      const unsigned m_max = job.m_max;
      for (unsigned long p : job.primes)
        for (unsigned long n : job.power_n)
          units.push_back({c, p, ord(n, p), {{"p", str(p)}, {"n", str(n)}},
                           [=](const LocalContextPtr& ctx) { return power_coeff_bound_check(*V, ctx, n, m_max); }});
    }
  }
  return units;
}

}  // namespace

ReportDocument::Summary ReportDocument::summary() const {
  Summary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++s.fail;
        break;
      case Status::Skip:
        ++s.skip;
        break;
      case Status::Invalid:
        ++s.invalid;
        break;
    }
    if (r.sharp) ++s.sharp;
  }
  return s;
}

ReportDocument run(const Job& job, unsigned workers) {
  const Prepared pr = prepare(job);
  std::vector<Unit> units = make_units(job, pr);

  // precision per prime
  std::map<unsigned long, int> max_bound;
  for (const auto& u : units)
    if (u.p) max_bound[u.p] = std::max(max_bound[u.p], u.bound);

  std::map<unsigned long, std::vector<LocalContextPtr>> contexts;
  std::map<unsigned long, std::string> ramified;
  for (const auto& [p, bound] : max_bound) {
    if (pr.field_conductor % p == 0) {
      ramified[p] = "p divides the field conductor " + std::to_string(pr.field_conductor);
      continue;
    }
    const unsigned M = job.precision ? *job.precision : static_cast<unsigned>(std::max(bound, 0) + 2);
    if (job.all_factors)
      contexts[p] = make_all_local_contexts(pr.field_conductor, p, M);
    else
      contexts[p] = {make_local_context(pr.field_conductor, p, M)};
  }

  struct Task {
    std::size_t unit;
    LocalContextPtr ctx;
    std::size_t ideal;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    auto it = contexts.find(u.p);
    if (u.p == 0 || it == contexts.end()) {
      tasks.push_back({i, nullptr, 0});
      continue;
    }
    for (std::size_t k = 0; k < it->second.size(); ++k) tasks.push_back({i, it->second[k], k});
  }

  std::vector<std::vector<CongruenceReport>> results(tasks.size());
  auto execute = [&](std::size_t t) {
    const Task& task = tasks[t];
    const Unit& u = units[task.unit];
    if (u.p && ramified.count(u.p)) {
      results[t] = {skip_report(u.check_id, u.params, ramified.at(u.p))};
      return;
    }
    try {
      results[t] = u.fn(task.ctx);
    } catch (const std::exception& e) {
      results[t] = {invalid_report(u.check_id, u.params, e.what())};
    }
    if (job.all_factors && task.ctx)
      for (auto& r : results[t]) r.params.emplace_back("ideal", std::to_string(task.ideal));
    if (task.ctx)
      for (auto& r : results[t]) r.params.emplace_back("M", std::to_string(task.ctx->precision()));
  };

  workers = std::max(1u, workers);
  if (workers == 1 || tasks.size() < 2) {
    for (std::size_t t = 0; t < tasks.size(); ++t) execute(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks.size()); ++w)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) execute(t);
      });
    for (auto& th : pool) th.join();
  }

  ReportDocument doc;
  doc.job = job.raw;
  for (auto& rs : results)
    for (auto& r : rs) doc.reports.push_back(std::move(r));
  std::stable_sort(doc.reports.begin(), doc.reports.end(),
                   [](const CongruenceReport& a, const CongruenceReport& b) { return a.check_id < b.check_id; });

  if (pr.has_series) {
    doc.series_info["conductor"] = pr.field_conductor;
    doc.series_info["truncation"] = pr.V.truncation();
    if (pr.period)
      doc.series_info["period"] = *pr.period;
    else
      doc.series_info["period"] = nullptr;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// output

ordered_json report_to_json(const CongruenceReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (!r.measured) {
    j["observed"] = nullptr;
  } else {
    ordered_json obs;
    obs["kind"] = r.observed.kind_name();
    if (r.observed.kind != PValuation::Kind::Zero) obs["value"] = r.observed.value;
    j["observed"] = obs;
  }
  j["predicted"] = r.predicted;
  j["status"] = status_name(r.status);
  j["sharp"] = r.sharp;
  j["note"] = r.note;
  return j;
}

ordered_json to_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["job"] = doc.job;
  j["series"] = doc.series_info.is_null() ? ordered_json::object() : doc.series_info;
  ordered_json reports = ordered_json::array();
  for (const auto& r : doc.reports) reports.push_back(report_to_json(r));
  j["reports"] = reports;
  auto s = doc.summary();
  j["summary"] = {{"total", s.total}, {"pass", s.pass},       {"fail", s.fail},
                  {"skip", s.skip},   {"invalid", s.invalid}, {"sharp", s.sharp}};
  return j;
}

std::string to_csv(const ReportDocument& doc) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "check_id,params,observed,predicted,status,sharp,note\n";
  for (const auto& r : doc.reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    os << quote(r.check_id) << ',' << quote(params) << ',' << (r.measured ? quote(r.observed.to_string()) : "") << ','
       << r.predicted << ',' << status_name(r.status) << ',' << (r.sharp ? "true" : "false") << ',' << quote(r.note)
       << '\n';
  }
  return os.str();
}

int exit_code(const ReportDocument& doc) {
  auto s = doc.summary();
  return (s.fail || s.invalid) ? 1 : 0;
}

}  // namespace supercong::harness
