#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "supercong/harness.hpp"

namespace sh = supercong::harness;
using nlohmann::json;

namespace {

json preset_series(const std::string& name) {
  if (name == "geometric")  // z / (1 - z)
    return {{"kind", "rational"}, {"conductor", 1}, {"numerator", {0, 1}}, {"denominator", {1, -1}}};
  if (name == "zeta3")  // sum zeta_3^n z^n
    return {{"kind", "periodic"},
            {"conductor", 3},
            {"values", {{{"coeffs", {0, 1}}}, {{"coeffs", {-1, -1}}}, {{"coeffs", {1}}}}}};
  if (name == "half")  // z / 2
    return {{"kind", "rational"}, {"conductor", 1}, {"numerator", {0, "1/2"}}, {"denominator", {1}}};
  throw sh::JobError("unknown series preset \"" + name + "\" (geometric, zeta3, half)");
}

struct Output {
  std::string out;
  std::string csv;
  unsigned jobs = 1;
  bool print_job = false;
};

void add_output_options(CLI::App* app, Output& o) {
  app->add_option("--out", o.out, "Write the report JSON here (default: stdout)");
  app->add_option("--csv", o.csv, "Also write a CSV table of reports");
  app->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--print-job", o.print_job, "Print the generated job instead of running it");
}

int execute(const json& job_json, const Output& o) {
  if (o.print_job) {
    std::cout << job_json.dump(2) << '\n';
    return 0;
  }
  sh::Job job = sh::parse_job(job_json);
  sh::ReportDocument doc = sh::run(job, o.jobs);
  const std::string text = sh::to_json(doc).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw sh::JobError("cannot write " + o.out);
    f << text;
  }
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw sh::JobError("cannot write " + o.csv);
    f << sh::to_csv(doc);
  }
  auto s = doc.summary();
  std::cerr << "total " << s.total << "  pass " << s.pass << "  fail " << s.fail << "  skip " << s.skip
            << "  invalid " << s.invalid << "  sharp " << s.sharp << '\n';
  return sh::exit_code(doc);
}

json base_job(const std::vector<unsigned long>& primes) {
  return {{"schema", sh::kJobSchema}, {"primes", primes}, {"precision", "auto"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of framing supercongruences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sh::kToolVersion);

  Output output;

  std::string job_path;
  unsigned horizon = 0;
  auto* run = app.add_subcommand("run", "Run a job file");
  run->add_option("job", job_path, "Job JSON")->required();
  run->add_option("--horizon", horizon, "Coefficients inspected for period detection");
  add_output_options(run, output);

  std::string series = "geometric";
  std::string nu = "1", sign = "+";
  unsigned sigma = 1, rho = 1;
  std::vector<unsigned long> primes{2, 3, 5, 7};
  std::vector<unsigned> ns;
  auto* frame = app.add_subcommand("frame", "Main theorem (or fractional variant) for a preset series");
  frame->add_option("--series", series, "geometric, zeta3 or half");
  frame->add_option("--nu", nu, "Framing parameter (integer or num/den)");
  frame->add_option("--sign", sign, "+ or -");
  frame->add_option("--sigma", sigma, "Cartier divisor");
  frame->add_option("--rho", rho, "Substitution index");
  frame->add_option("--primes", primes)->delimiter(',');
  frame->add_option("--n", ns, "Indices (default 1..10)")->delimiter(',');
  add_output_options(frame, output);

  unsigned a_max = 5;
  unsigned r_max = 2;
  auto* jk = app.add_subcommand("jk", "Jacobsthal-Kazandzidis sweep");
  jk->add_option("--primes", primes)->delimiter(',');
  jk->add_option("--a-max", a_max, "Largest a");
  jk->add_option("--r-max", r_max, "Largest r");
  add_output_options(jk, output);

  auto* wol = app.add_subcommand("wolstenholme", "Harmonic and periodic Wolstenholme sums");
  wol->add_option("--series", series, "geometric, zeta3 or half");
  wol->add_option("--primes", primes)->delimiter(',');
  wol->add_option("--n", ns, "Indices (default p, p^2 and 2p^2 for each prime)")->delimiter(',');
  add_output_options(wol, output);

  unsigned T = 32;
  auto* dwork = app.add_subcommand("dwork", "Dwork integrality diagnostics");
  dwork->add_option("--series", series, "geometric, zeta3 or half");
  dwork->add_option("--primes", primes)->delimiter(',');
  dwork->add_option("--T", T, "Truncation");
  add_output_options(dwork, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      json j;
      {
        std::ifstream in(job_path);
        if (!in) throw sh::JobError("cannot open " + job_path);
        try {
          in >> j;
        } catch (const json::exception& e) {
          throw sh::JobError("malformed JSON in " + job_path + ": " + e.what());
        }
      }
      if (horizon) j["horizon"] = horizon;
      return execute(j, output);
    }
    if (*frame) {
      json j = base_job(primes);
      j["series"] = preset_series(series);
      j["framing"] = {{"sign", sign}, {"nu", nu}, {"sigma", sigma}, {"rho", rho}};
      j["checks"] = {sigma == 1 && rho == 1 ? "main" : "fractional"};
      if (ns.empty())
        j["n"] = {{"from", 1}, {"to", 10}};
      else
        j["n"] = ns;
      return execute(j, output);
    }
    if (*jk) {
      json j = base_job(primes);
      j["checks"] = {"jk"};
      j["a_max"] = a_max;
      j["r"] = r_max;
      return execute(j, output);
    }
    if (*wol) {
      json j = base_job(primes);
      j["series"] = preset_series(series);
      j["checks"] = {"harmonic", "wolstenholme"};
      if (ns.empty()) {
        std::vector<unsigned> def;
        for (unsigned long p : primes)
          for (unsigned long v : {p, p * p, 2 * p * p}) def.push_back(static_cast<unsigned>(v));
        std::sort(def.begin(), def.end());
        def.erase(std::unique(def.begin(), def.end()), def.end());
        j["n"] = def;
      } else {
        j["n"] = ns;
      }
      return execute(j, output);
    }
    if (*dwork) {
      json j = base_job(primes);
      j["series"] = preset_series(series);
      j["checks"] = {"dwork"};
      j["truncation"] = T;
      return execute(j, output);
    }
  } catch (const sh::JobError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
