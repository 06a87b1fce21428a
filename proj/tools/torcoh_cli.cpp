// Command-line front end. Everything goes through the C API: this file
// composes a job document, hands it to torcoh_run_job, and routes the result
// to stdout or a file. All file IO lives here; the library never opens files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torcoh/torcoh.h"

namespace {

using Json = nlohmann::json;

constexpr int kIoExitCode = TORCOH_EBADARG;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Json load_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("bad ") + what + ": \"" + text +
                               "\" (want comma-separated integers)");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 0;
  bool timings = false;
  int workers = 1;
  std::string output;
  std::string strategy;
  bool no_check_dd = false;
  long precision = 0;
  long max_entry_bits = 0;
  long max_group_order = 0;
  long max_bar_length = 0;
  long max_tensor_degree = 0;
};

void apply_common(Json& params, const Common& c) {
  if (!c.strategy.empty()) params["strategy"] = c.strategy;
  if (c.no_check_dd) params["check_dd"] = false;
  Json caps = Json::object();
  if (c.precision > 0) caps["precision_digits"] = c.precision;
  if (c.max_entry_bits > 0) caps["max_entry_bits"] = c.max_entry_bits;
  if (c.max_group_order > 0) caps["max_group_order"] = c.max_group_order;
  if (c.max_bar_length > 0) caps["max_bar_length"] = c.max_bar_length;
  if (c.max_tensor_degree > 0) caps["max_tensor_degree"] = c.max_tensor_degree;
  if (!caps.empty()) params["caps"] = caps;
}

// Input selection shared by cohomology / torsion / verify.
struct ComplexInput {
  std::string complex_path;
  std::string module_path;
  std::string cochain_path;
  std::string lens;
  long max_degree = -2;  // -2: flag absent
};

void add_complex_input(CLI::App* cmd, ComplexInput& in) {
  cmd->add_option("--complex", in.complex_path,
                  "group-ring complex JSON file");
  cmd->add_option("--module", in.module_path,
                  "coefficient module JSON file (with --complex)");
  cmd->add_option("--cochain", in.cochain_path,
                  "integer cochain complex JSON file");
  cmd->add_option("--lens", in.lens, "lens parameters p,q (builtin family)");
  cmd->add_option("--max-degree", in.max_degree,
                  "highest degree to report (default: all)");
}

void apply_complex_input(Json& params, const ComplexInput& in) {
  if (!in.lens.empty()) {
    const auto pq = parse_long_list(in.lens, "--lens");
    if (pq.size() != 2) throw std::runtime_error("--lens wants p,q");
    params["lens"] = pq;
  }
  if (!in.cochain_path.empty())
    params["cochain"] = load_json_file(in.cochain_path);
  if (!in.complex_path.empty())
    params["complex"] = load_json_file(in.complex_path);
  if (!in.module_path.empty())
    params["module"] = load_json_file(in.module_path);
  if (in.max_degree != -2) params["max_degree"] = in.max_degree;
}

int emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return 0;
  }
  write_file(c.output, text);
  return 0;
}

// Runs the composed job and returns (status, result envelope).
std::pair<int, Json> run_job(const std::string& command, const Json& params,
                             const Common& c) {
  const Json job{{"command", command}, {"params", params},
                 {"seed", c.seed},     {"workers", c.workers},
                 {"timings", c.timings}};
  torcoh_ctx* ctx = torcoh_ctx_new();
  if (ctx == nullptr) throw std::runtime_error("cannot allocate context");
  char* out = nullptr;
  const int st = torcoh_run_job(ctx, job.dump().c_str(), &out);
  std::string doc = out != nullptr ? out : "";
  torcoh_free(out);
  if (doc.empty()) {
    const std::string msg = torcoh_last_error(ctx);
    torcoh_ctx_free(ctx);
    throw std::runtime_error("job failed before producing a document: " + msg);
  }
  torcoh_ctx_free(ctx);
  return {st, Json::parse(doc)};
}

int finish_default(const std::string& command, const Json& params,
                   const Common& c) {
  const auto [st, doc] = run_job(command, params, c);
  emit(c, doc.dump(2) + "\n");
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact torsion and cohomology of small integral complexes"};
  app.set_version_flag("--version", torcoh_version());
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--seed", c.seed, "random seed recorded in every output")
      ->capture_default_str();
  app.add_flag("--timings", c.timings,
               "add timing_ms to outputs (breaks byte-identical reruns)");
  app.add_option("--workers", c.workers, "max concurrent sweep rows")
      ->capture_default_str();
  app.add_option("-o,--output", c.output, "write the result to this file");
  app.add_option("--strategy", c.strategy,
                 "divisor-chain strategy: fraction-free or modular");
  app.add_flag("--no-check-dd", c.no_check_dd,
               "skip the D after D == 0 verification");
  app.add_option("--precision", c.precision, "significant digits for reals");
  app.add_option("--max-entry-bits", c.max_entry_bits,
                 "cap on intermediate integer size");
  app.add_option("--max-group-order", c.max_group_order,
                 "cap on finite group enumeration");
  app.add_option("--max-bar-length", c.max_bar_length,
                 "cap on bar resolution length");
  app.add_option("--max-tensor-degree", c.max_tensor_degree,
                 "cap on symmetrizer tensor degree");

  // cohomology / torsion / verify share their input options.
  ComplexInput coh_in, tor_in, ver_in;
  CLI::App* coh = app.add_subcommand(
      "cohomology", "per-degree free ranks and divisor chains");
  add_complex_input(coh, coh_in);
  CLI::App* tor = app.add_subcommand(
      "torsion", "determinant-route torsion of an acyclic complex");
  add_complex_input(tor, tor_in);
  CLI::App* ver = app.add_subcommand(
      "verify", "check torsion == alternating product of cohomology orders");
  add_complex_input(ver, ver_in);

  // dims
  std::string dims_weight;
  long dims_m = 1, dims_n = -1, dims_d = -1;
  CLI::App* dims =
      app.add_subcommand("dims", "module dimensions and rank formulas");
  dims->add_option("--weight", dims_weight, "weight spec, e.g. A2:1,0");
  dims->add_option("--m", dims_m, "scale factor")->capture_default_str();
  dims->add_option("--n", dims_n, "orthogonal family parameter n");
  dims->add_option("--d", dims_d, "number of factors d");

  // constants
  bool k_sl3 = false, k_so = false;
  std::string k_volx = "1", k_volxd = "1", k_weight;
  long k_m = -1, k_p = -1, k_q = -1, k_d = -1;
  CLI::App* con =
      app.add_subcommand("constants", "closed-form constants and predictions");
  con->add_flag("--sl3", k_sl3, "special linear family");
  con->add_flag("--so", k_so, "orthogonal family");
  con->add_option("--volX", k_volx, "volume of the quotient space")
      ->capture_default_str();
  con->add_option("--volXd", k_volxd, "volume of the compact dual")
      ->capture_default_str();
  con->add_option("--weight", k_weight, "base weight (sl3), e.g. A2:1,0");
  con->add_option("--m", k_m, "scale factor");
  con->add_option("--p", k_p, "signature p (so)");
  con->add_option("--q", k_q, "signature q (so)");
  con->add_option("--d", k_d, "number of factors (so)");

  // sweep
  std::string sw_family, sw_complex, sw_base, sw_weight, sw_volx = "1",
                                               sw_volxd = "1";
  long sw_pfrom = 3, sw_pto = -1, sw_pstep = 2, sw_q = 1;
  long sw_mfrom = 0, sw_mto = -1, sw_mstep = 1, sw_maxdeg = -2;
  bool sw_dual = false, sw_json = false;
  CLI::App* sw = app.add_subcommand("sweep", "parameter sweeps emitting CSV");
  sw->add_option("--family", sw_family, "lens or sym")->required();
  sw->add_option("--p-from", sw_pfrom, "first lens order")
      ->capture_default_str();
  sw->add_option("--p-to", sw_pto, "last lens order");
  sw->add_option("--p-step", sw_pstep, "lens order step")
      ->capture_default_str();
  sw->add_option("--q", sw_q, "lens twist")->capture_default_str();
  sw->add_option("--complex", sw_complex, "group-ring complex JSON file");
  sw->add_option("--base-module", sw_base, "base module JSON file");
  sw->add_option("--m-from", sw_mfrom, "first symmetric power");
  sw->add_option("--m-to", sw_mto, "last symmetric power");
  sw->add_option("--m-step", sw_mstep, "symmetric power step")
      ->capture_default_str();
  sw->add_flag("--dual", sw_dual, "use the contragredient symmetric power");
  sw->add_option("--weight", sw_weight, "adds a prediction column");
  sw->add_option("--volX", sw_volx, "volume of the quotient space")
      ->capture_default_str();
  sw->add_option("--volXd", sw_volxd, "volume of the compact dual")
      ->capture_default_str();
  sw->add_option("--max-degree", sw_maxdeg, "highest degree to report");
  sw->add_flag("--json", sw_json, "print the JSON envelope instead of CSV");

  // fit
  std::string fit_series;
  long fit_degree = -1;
  bool fit_slope = false;
  CLI::App* fit =
      app.add_subcommand("fit", "least-squares growth fit of a CSV series");
  fit->add_option("--series", fit_series, "CSV file of m,value rows")
      ->required();
  fit->add_option("--degree", fit_degree, "polynomial degree of the model")
      ->required();
  fit->add_flag("--estimate-slope", fit_slope,
                "also estimate the log-log growth exponent");

  // lens
  long lens_p = 0, lens_q = 0;
  std::string lens_module_kind = "step", lens_cout, lens_mout;
  CLI::App* lens =
      app.add_subcommand("lens", "emit a lens complex and its module");
  lens->add_option("--p", lens_p, "group order")->required();
  lens->add_option("--q", lens_q, "twist, coprime to p")->required();
  lens->add_option("--module", lens_module_kind, "step or trivial")
      ->capture_default_str();
  lens->add_option("--complex-out", lens_cout,
                   "write just the complex document here");
  lens->add_option("--module-out", lens_mout,
                   "write just the module document here");

  // random
  std::string rnd_shape;
  long rnd_bound = 9;
  CLI::App* rnd = app.add_subcommand(
      "random", "seeded random rationally-acyclic cochain complex");
  rnd->add_option("--shape", rnd_shape, "degree lengths, e.g. 4,8,4")
      ->required();
  rnd->add_option("--entry-bound", rnd_bound, "max |entry| of the core")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coh || *tor || *ver) {
      const ComplexInput& in = *coh ? coh_in : (*tor ? tor_in : ver_in);
      const char* name = *coh ? "cohomology" : (*tor ? "torsion" : "verify");
      Json params = Json::object();
      apply_complex_input(params, in);
      apply_common(params, c);
      return finish_default(name, params, c);
    }

    if (*dims) {
      Json params = Json::object();
      if (!dims_weight.empty()) {
        params["weight"] = dims_weight;
        params["m"] = dims_m;
      } else {
        params["n"] = dims_n;
        params["d"] = dims_d;
        params["m"] = dims_m;
      }
      apply_common(params, c);
      return finish_default("dims", params, c);
    }

    if (*con) {
      if (k_sl3 == k_so)
        throw std::runtime_error("pick exactly one of --sl3 / --so");
      Json params{{"kind", k_sl3 ? "sl3" : "so"},
                  {"vol_x", k_volx},
                  {"vol_xd", k_volxd}};
      if (!k_weight.empty()) params["weight"] = k_weight;
      if (k_m >= 0) params["m"] = k_m;
      if (k_p >= 0) params["p"] = k_p;
      if (k_q >= 0) params["q"] = k_q;
      if (k_d >= 0) params["d"] = k_d;
      apply_common(params, c);
      return finish_default("constants", params, c);
    }

    if (*sw) {
      Json params{{"family", sw_family}};
      if (sw_family == "lens") {
        params["p_from"] = sw_pfrom;
        if (sw_pto >= 0) params["p_to"] = sw_pto;
        params["p_step"] = sw_pstep;
        params["q"] = sw_q;
      } else {
        if (!sw_complex.empty())
          params["complex"] = load_json_file(sw_complex);
        if (!sw_base.empty())
          params["base_module"] = load_json_file(sw_base);
        params["m_from"] = sw_mfrom;
        if (sw_mto >= 0) params["m_to"] = sw_mto;
        params["m_step"] = sw_mstep;
        if (sw_dual) params["dual"] = true;
        if (!sw_weight.empty()) {
          params["weight"] = sw_weight;
          params["vol_x"] = sw_volx;
          params["vol_xd"] = sw_volxd;
        }
        if (sw_maxdeg != -2) params["max_degree"] = sw_maxdeg;
      }
      apply_common(params, c);
      const auto [st, doc] = run_job("sweep", params, c);
      if (sw_json || st != 0) {
        emit(c, doc.dump(2) + "\n");
      } else {
        emit(c, doc.at("result").at("csv").get<std::string>());
      }
      return st;
    }

    if (*fit) {
      Json params{{"series_csv", read_file(fit_series)},
                  {"degree", fit_degree}};
      if (fit_slope) params["estimate_slope"] = true;
      apply_common(params, c);
      return finish_default("fit", params, c);
    }

    if (*lens) {
      Json params{{"p", lens_p}, {"q", lens_q}, {"module", lens_module_kind}};
      apply_common(params, c);
      const auto [st, doc] = run_job("lens", params, c);
      if (st != 0 || (lens_cout.empty() && lens_mout.empty()))
        emit(c, doc.dump(2) + "\n");
      if (st == 0 && !lens_cout.empty())
        write_file(lens_cout, doc.at("result").at("complex").dump(2) + "\n");
      if (st == 0 && !lens_mout.empty())
        write_file(lens_mout, doc.at("result").at("module").dump(2) + "\n");
      return st;
    }

    if (*rnd) {
      Json params = Json::object();
      params["shape"] = parse_long_list(rnd_shape, "--shape");
      params["entry_bound"] = rnd_bound;
      apply_common(params, c);
      return finish_default("random", params, c);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoExitCode;
  }
  return 0;
}
