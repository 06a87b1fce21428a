#include "torcoh/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>

#include "torcoh/reps.hpp"
#include "torcoh/weights.hpp"

namespace torcoh {

namespace {

const Json& need(const Json& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end())
    fail(Errc::bad_argument, std::string("missing parameter \"") + key + "\"");
  return *it;
}

long need_long(const Json& p, const char* key) {
  const Json& v = need(p, key);
  if (!v.is_number_integer())
    fail(Errc::bad_argument,
         std::string("parameter \"") + key + "\" must be an integer");
  return v.get<long>();
}

long long_or(const Json& p, const char* key, long dflt) {
  return p.contains(key) ? need_long(p, key) : dflt;
}

bool bool_or(const Json& p, const char* key, bool dflt) {
  if (!p.contains(key)) return dflt;
  const Json& v = p.at(key);
  if (!v.is_boolean())
    fail(Errc::bad_argument,
         std::string("parameter \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string need_str(const Json& p, const char* key) {
  const Json& v = need(p, key);
  if (!v.is_string())
    fail(Errc::bad_argument,
         std::string("parameter \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Real real_or(const Json& p, const char* key, const char* dflt,
             const Caps& caps) {
  if (!p.contains(key)) return Real::parse(dflt, caps.precision_digits);
  const Json& v = p.at(key);
  if (v.is_string()) return Real::parse(v.get<std::string>(), caps.precision_digits);
  if (v.is_number()) return Real::parse(v.dump(), caps.precision_digits);
  fail(Errc::bad_argument,
       std::string("parameter \"") + key + "\" must be a number or string");
}

SnfStrategy strategy_param(const Json& p) {
  const std::string s =
      p.contains("strategy") ? need_str(p, "strategy") : "fraction-free";
  if (s == "fraction-free") return SnfStrategy::fraction_free;
  if (s == "modular") return SnfStrategy::modular;
  fail(Errc::bad_argument,
       "unknown strategy \"" + s + "\" (want fraction-free or modular)");
}

Caps caps_param(const Json& p) {
  Caps caps = default_caps();
  if (!p.contains("caps")) return caps;
  const Json& c = need(p, "caps");
  caps.max_entry_bits =
      static_cast<std::size_t>(long_or(c, "max_entry_bits", static_cast<long>(caps.max_entry_bits)));
  caps.max_group_order = static_cast<int>(long_or(c, "max_group_order", caps.max_group_order));
  caps.max_bar_length = static_cast<int>(long_or(c, "max_bar_length", caps.max_bar_length));
  caps.max_tensor_degree = static_cast<int>(long_or(c, "max_tensor_degree", caps.max_tensor_degree));
  caps.precision_digits = static_cast<int>(long_or(c, "precision_digits", caps.precision_digits));
  if (caps.precision_digits < 10 || caps.precision_digits > 10000)
    fail(Errc::bad_argument, "precision_digits must be in [10, 10000]");
  return caps;
}

std::pair<long, long> lens_params(const Json& v) {
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
      v[1].is_number_integer())
    return {v[0].get<long>(), v[1].get<long>()};
  fail(Errc::bad_argument, "\"lens\" must be [p, q]");
}

// Accepts one of: {"lens":[p,q]}, {"cochain":<doc>}, or {"complex":<doc>}
// with an optional {"module":<doc>} (trivial coefficients otherwise).
CochainComplex resolve_cochain(const Json& p, bool check_dd, const Caps& caps) {
  if (p.contains("lens")) {
    const auto [lp, lq] = lens_params(p.at("lens"));
    return specialize(lens_complex(lp, lq), lens_module(lp), check_dd, caps);
  }
  if (p.contains("cochain")) {
    CochainComplex cc = cochain_from_json(p.at("cochain"));
    cc.validate(check_dd, caps);
    return cc;
  }
  if (p.contains("complex")) {
    const GroupRingComplex gc = complex_from_json(p.at("complex"));
    const CoeffModule mod = p.contains("module")
                                ? module_from_json(p.at("module"))
                                : trivial_module(gc.num_generators);
    return specialize(gc, mod, check_dd, caps);
  }
  fail(Errc::bad_argument,
       "no input complex (want \"lens\", \"cochain\", or \"complex\")");
}

Json run_cohomology(const Json& p, const Caps& caps) {
  const bool check_dd = bool_or(p, "check_dd", true);
  const CochainComplex cc = resolve_cochain(p, check_dd, caps);
  const CohomologyResult r =
      cohomology(cc, strategy_param(p),
                 static_cast<int>(long_or(p, "max_degree", -1)), caps);
  return Json{{"cohomology", cohomology_to_json(r)},
              {"euler_characteristic", to_string(euler_characteristic(r))}};
}

Json run_torsion(const Json& p, const Caps& caps) {
  const bool check_dd = bool_or(p, "check_dd", true);
  const CochainComplex cc = resolve_cochain(p, check_dd, caps);
  return Json{{"torsion", torsion_to_json(reidemeister_torsion(cc, caps))}};
}

Json run_verify(const Json& p, const Caps& caps) {
  const bool check_dd = bool_or(p, "check_dd", true);
  const CochainComplex cc = resolve_cochain(p, check_dd, caps);
  const VerifyReport rep =
      verify_torsion_equals_cohomology(cc, strategy_param(p), caps);
  return Json{{"verify", verify_to_json(rep)}};
}

Json run_dims(const Json& p) {
  if (p.contains("weight")) {
    const HighestWeight w = parse_weight(need_str(p, "weight"));
    const long m = long_or(p, "m", 1);
    if (m < 0) fail(Errc::bad_argument, "m must be >= 0");
    return Json{{"weight", w.str()},
                {"m", m},
                {"dim", to_string(weyl_dim(scale_weight(w, m)))}};
  }
  if (p.contains("n")) {
    const long n = need_long(p, "n");
    const long d = need_long(p, "d");
    const long m = long_or(p, "m", 1);
    return Json{{"n", n},
                {"d", d},
                {"m", m},
                {"rank", to_string(rho_m_rank(static_cast<int>(n),
                                              static_cast<int>(d), m))}};
  }
  fail(Errc::bad_argument, "dims needs \"weight\" or (\"n\", \"d\")");
}

Json run_constants(const Json& p, const Caps& caps) {
  const std::string kind = need_str(p, "kind");
  Geometry geom{real_or(p, "vol_x", "1", caps), real_or(p, "vol_xd", "1", caps)};
  geom.validate();
  Json out{{"kind", kind},
           {"vol_x", geom.vol_x.str()},
           {"vol_xd", geom.vol_xd.str()}};
  if (kind == "sl3") {
    const HighestWeight w = parse_weight(need_str(p, "weight"));
    const long m = long_or(p, "m", 1);
    const Sl3Prediction pred = predict_alt_sum_sl3(geom, w, m, caps);
    out["weight"] = w.str();
    out["m"] = m;
    out["dimension"] = to_string(pred.dimension);
    out["constant_known"] = pred.constant_known;
    if (pred.constant_known) {
      out["constant"] = Json{{"num", to_string(Int(pred.constant.get_num()))},
                             {"den", to_string(Int(pred.constant.get_den()))}};
      out["value"] = pred.value.str();
    }
    out["liminf_lower"] = liminf_lower_sl3(geom, caps).str();
    return out;
  }
  if (kind == "so") {
    const int sp = static_cast<int>(need_long(p, "p"));
    const int sq = static_cast<int>(need_long(p, "q"));
    out["p"] = sp;
    out["q"] = sq;
    out["c_pq"] = c_pq(sp, sq, geom.vol_xd, caps).str();
    if (p.contains("d")) {
      const int d = static_cast<int>(need_long(p, "d"));
      out["d"] = d;
      out["liminf_lower"] = liminf_lower_so(geom, sp, sq, d, caps).str();
      if (p.contains("m")) {
        const long m = need_long(p, "m");
        out["m"] = m;
        out["rank"] = to_string(rho_m_rank((sp + sq) / 2 - 1, d, m));
        out["value"] = predict_alt_sum_so(geom, sp, sq, d, m, caps).str();
      }
    }
    return out;
  }
  fail(Errc::bad_argument, "unknown constants kind \"" + kind + "\"");
}

Json run_fit(const Json& p, const Caps& caps) {
  const GrowthSeries s = series_from_csv(need_str(p, "series_csv"));
  const int degree = static_cast<int>(need_long(p, "degree"));
  const FitResult f = fit_growth(s, degree, caps);
  Json out{{"degree", degree},
           {"points", static_cast<int>(s.points.size())},
           {"leading_coeff", f.leading_coeff.str()},
           {"second_coeff", f.second_coeff.str()},
           {"residual_rel", f.residual_rel.str()},
           {"ill_conditioned", f.ill_conditioned}};
  if (bool_or(p, "estimate_slope", false))
    out["log_slope"] = estimate_log_slope(s, caps).str();
  return out;
}

Json run_lens(const Json& p) {
  const long lp = need_long(p, "p");
  const long lq = need_long(p, "q");
  const std::string kind =
      p.contains("module") ? need_str(p, "module") : "step";
  CoeffModule mod;
  if (kind == "step")
    mod = lens_module(lp);
  else if (kind == "trivial")
    mod = trivial_module(1);
  else
    fail(Errc::bad_argument,
         "unknown lens module \"" + kind + "\" (want step or trivial)");
  return Json{{"complex", complex_to_json(lens_complex(lp, lq))},
              {"module", module_to_json(mod)}};
}

Json run_random(const Json& p, std::uint64_t seed, const Caps& caps) {
  const Json& sj = need(p, "shape");
  if (!sj.is_array())
    fail(Errc::bad_argument, "parameter \"shape\" must be an array");
  std::vector<int> shape;
  for (const Json& v : sj) {
    if (!v.is_number_integer())
      fail(Errc::bad_argument, "shape entries must be integers");
    shape.push_back(v.get<int>());
  }
  const long bound = long_or(p, "entry_bound", 9);
  return Json{{"cochain", cochain_to_json(random_acyclic(shape, seed, bound, caps))}};
}

// --- sweep ---------------------------------------------------------------

struct SweepRow {
  std::vector<std::string> fields;
};

// Commas inside a status message would shift CSV columns.
std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

// Shared tail of a sweep row: per-degree orders (up to `degrees` of them),
// log of the alternating order product, log torsion. Orders of groups with
// free part print as "inf"; logs that are undefined stay empty.
void push_cohomology_fields(SweepRow& row, const CochainComplex& cc,
                            SnfStrategy strategy, int max_degree, int degrees,
                            const Caps& caps) {
  const CohomologyResult r = cohomology(cc, strategy, max_degree, caps);
  bool finite = true;
  for (int qd = 0; qd < degrees; ++qd) {
    const auto& d = r.at(qd);
    finite = finite && d.free_rank == 0;
    row.fields.push_back(d.free_rank > 0 ? "inf" : to_string(d.torsion_order));
  }
  if (finite) {
    Rat alt(1);
    for (int qd = 0; qd < degrees; ++qd) {
      const Rat o(r.at(qd).torsion_order);
      if (qd % 2 == 1)
        alt *= o;
      else
        alt /= o;
    }
    row.fields.push_back(Real::of(alt, caps.precision_digits).ln().str());
  } else {
    row.fields.push_back("");
  }
  try {
    row.fields.push_back(reidemeister_torsion(cc, caps).log_t.str());
  } catch (const Error&) {
    row.fields.push_back("");  // not rationally acyclic: no torsion defined
  }
}

Json sweep_result(const std::vector<std::string>& header,
                  std::vector<SweepRow> rows) {
  std::string csv = join_csv(header) + "\n";
  for (const auto& r : rows) csv += join_csv(r.fields) + "\n";
  return Json{{"columns", header},
              {"rows", static_cast<int>(rows.size())},
              {"csv", csv}};
}

// Runs row builders with at most `workers` concurrent tasks; results land in
// input order no matter which task finishes first.
std::vector<SweepRow> run_rows(int workers,
                               const std::vector<std::function<SweepRow()>>& tasks) {
  std::vector<SweepRow> rows(tasks.size());
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) rows[i] = tasks[i]();
    return rows;
  }
  size_t next = 0;
  while (next < tasks.size()) {
    const size_t batch =
        std::min<size_t>(static_cast<size_t>(workers), tasks.size() - next);
    std::vector<std::future<SweepRow>> fs;
    fs.reserve(batch);
    for (size_t k = 0; k < batch; ++k)
      fs.push_back(std::async(std::launch::async, tasks[next + k]));
    for (size_t k = 0; k < batch; ++k) rows[next + k] = fs[k].get();
    next += batch;
  }
  return rows;
}

Json run_sweep(const Json& p, int workers, const Caps& caps) {
  const std::string family = need_str(p, "family");
  const SnfStrategy strategy = strategy_param(p);

  if (family == "lens") {
    const long p_from = long_or(p, "p_from", 3);
    const long p_to = need_long(p, "p_to");
    const long p_step = long_or(p, "p_step", 2);
    const long q = long_or(p, "q", 1);
    if (p_from < 2 || p_step < 1)
      fail(Errc::bad_argument, "lens sweep needs p_from >= 2 and p_step >= 1");
    std::vector<std::function<SweepRow()>> tasks;
    for (long pp = p_from; pp <= p_to; pp += p_step) {
      tasks.push_back([pp, q, strategy, &caps]() {
        SweepRow row;
        row.fields.push_back(std::to_string(pp));
        try {
          const CochainComplex cc =
              specialize(lens_complex(pp, q), lens_module(pp), true, caps);
          row.fields.push_back(std::to_string(pp - 1));
          push_cohomology_fields(row, cc, strategy, -1, 4, caps);
          row.fields.push_back("ok");
        } catch (const Error& e) {
          row.fields.resize(1);
          row.fields.resize(8);
          row.fields.push_back(csv_safe(std::string("error: ") + e.what()));
        }
        return row;
      });
    }
    const std::vector<std::string> header = {"p",     "rank",    "h0", "h1",
                                             "h2",    "h3",      "log_alt",
                                             "log_torsion", "status"};
    return sweep_result(header, run_rows(workers, tasks));
  }

  if (family == "sym") {
    const GroupRingComplex gc = complex_from_json(need(p, "complex"));
    const CoeffModule base = module_from_json(need(p, "base_module"));
    const long m_from = need_long(p, "m_from");
    const long m_to = need_long(p, "m_to");
    const long m_step = long_or(p, "m_step", 1);
    const bool dual = bool_or(p, "dual", false);
    const bool check_dd = bool_or(p, "check_dd", true);
    const int max_degree = static_cast<int>(long_or(p, "max_degree", -1));
    if (m_from < 0 || m_step < 1)
      fail(Errc::bad_argument, "sym sweep needs m_from >= 0 and m_step >= 1");

    // Optional prediction column for the SL(3) family; validated up front so
    // a bad weight fails the whole job instead of poisoning every row.
    const bool want_prediction = p.contains("weight");
    HighestWeight w;
    Geometry geom{real_or(p, "vol_x", "1", caps), real_or(p, "vol_xd", "1", caps)};
    if (want_prediction) {
      w = parse_weight(need_str(p, "weight"));
      geom.validate();
      if (w.kind != RootKind::A2 || is_theta_fixed(w))
        fail(Errc::bad_argument,
             "prediction column needs a non-twist-fixed A2 weight");
    }

    const int top = gc.top_degree();
    const int degrees = (max_degree >= 0 ? std::min(max_degree, top) : top) + 1;
    std::vector<std::function<SweepRow()>> tasks;
    for (long m = m_from; m <= m_to; m += m_step) {
      tasks.push_back([&, m]() {
        SweepRow row;
        row.fields.push_back(std::to_string(m));
        try {
          const CoeffModule mod = dual
                                      ? dual_sym_power_module(base, static_cast<int>(m), caps)
                                      : sym_power_module(base, static_cast<int>(m), caps);
          row.fields.push_back(std::to_string(mod.rank));
          const CochainComplex cc = specialize(gc, mod, check_dd, caps);
          push_cohomology_fields(row, cc, strategy, max_degree, degrees, caps);
          std::optional<Real> pred;
          if (want_prediction && m >= 1) {
            const Sl3Prediction sp = predict_alt_sum_sl3(geom, w, m, caps);
            if (sp.constant_known) pred = sp.value;
          }
          row.fields.push_back(pred ? pred->str() : "");
          row.fields.push_back("ok");
        } catch (const Error& e) {
          row.fields.resize(1);
          row.fields.resize(static_cast<size_t>(degrees) + 5);
          row.fields.push_back(csv_safe(std::string("error: ") + e.what()));
        }
        return row;
      });
    }
    std::vector<std::string> header = {"m", "rank"};
    for (int qd = 0; qd < degrees; ++qd) header.push_back("h" + std::to_string(qd));
    header.push_back("log_alt");
    header.push_back("log_torsion");
    header.push_back("prediction");
    header.push_back("status");
    return sweep_result(header, run_rows(workers, tasks));
  }

  fail(Errc::bad_argument,
       "unknown sweep family \"" + family + "\" (want lens or sym)");
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse: return "parse";
    case Errc::validate: return "validate";
    case Errc::capacity: return "capacity";
    case Errc::unsupported: return "unsupported";
    case Errc::bad_argument: return "bad_argument";
    case Errc::internal: return "internal";
  }
  return "internal";
}

Json dispatch(const JobSpec& job, const Caps& caps) {
  const Json& p = job.params;
  if (job.command == "cohomology") return run_cohomology(p, caps);
  if (job.command == "torsion") return run_torsion(p, caps);
  if (job.command == "verify") return run_verify(p, caps);
  if (job.command == "dims") return run_dims(p);
  if (job.command == "constants") return run_constants(p, caps);
  if (job.command == "sweep") return run_sweep(p, std::max(1, job.workers), caps);
  if (job.command == "fit") return run_fit(p, caps);
  if (job.command == "lens") return run_lens(p);
  if (job.command == "random") return run_random(p, job.seed, caps);
  fail(Errc::bad_argument, "unknown command \"" + job.command + "\"");
}

}  // namespace

ResultRecord run(const JobSpec& job) {
  const auto t0 = std::chrono::steady_clock::now();
  Json envelope{{"format", "torcoh-result"},
                {"version", 1},
                {"tool_version", kToolVersion},
                {"command", job.command},
                {"seed", std::to_string(job.seed)},
                {"params", job.params}};
  ResultRecord rec;
  try {
    const Caps caps = caps_param(job.params);
    envelope["result"] = dispatch(job, caps);
    rec.status = 0;
  } catch (const Error& e) {
    envelope["error"] = Json{{"code", static_cast<int>(e.code())},
                             {"kind", errc_name(e.code())},
                             {"message", e.what()}};
    rec.status = static_cast<int>(e.code());
  } catch (const std::exception& e) {
    envelope["error"] = Json{{"code", static_cast<int>(Errc::internal)},
                             {"kind", "internal"},
                             {"message", e.what()}};
    rec.status = static_cast<int>(Errc::internal);
  }
  if (job.timings) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    envelope["timing_ms"] = static_cast<long>(ms);
  }
  rec.document = std::move(envelope);
  return rec;
}

}  // namespace torcoh
