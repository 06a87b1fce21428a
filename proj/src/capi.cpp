#include "torcoh/torcoh.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "torcoh/jobs.hpp"

struct torcoh_ctx {
  torcoh::Caps caps = torcoh::default_caps();
  std::string last_error;
};

namespace {

using torcoh::Errc;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs the body with the context's error plumbing. The body returns a status
// code; exceptions map onto the shared error taxonomy.
template <typename F>
int guarded(torcoh_ctx* ctx, F&& body) {
  if (ctx == nullptr) return TORCOH_EBADARG;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const torcoh::Error& e) {
    ctx->last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return TORCOH_EINTERNAL;
  }
}

int out_string(torcoh_ctx* ctx, char** out, const std::string& value) {
  *out = dup_string(value);
  if (*out == nullptr) {
    ctx->last_error = "out of memory";
    return TORCOH_ECAPACITY;
  }
  return TORCOH_OK;
}

bool check_out(torcoh_ctx* ctx, const void* in, char** out) {
  if (out != nullptr) *out = nullptr;
  if (ctx == nullptr) return false;
  if (in == nullptr || out == nullptr) {
    ctx->last_error = "null argument";
    return false;
  }
  return true;
}

}  // namespace

extern "C" {

const char* torcoh_version(void) { return torcoh::kToolVersion; }

torcoh_ctx* torcoh_ctx_new(void) {
  try {
    return new torcoh_ctx();
  } catch (...) {
    return nullptr;
  }
}

void torcoh_ctx_free(torcoh_ctx* ctx) { delete ctx; }

const char* torcoh_last_error(const torcoh_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

int torcoh_set_option(torcoh_ctx* ctx, const char* name, long value) {
  if (ctx == nullptr) return TORCOH_EBADARG;
  ctx->last_error.clear();
  if (name == nullptr) {
    ctx->last_error = "null option name";
    return TORCOH_EBADARG;
  }
  const std::string n = name;
  if (value <= 0) {
    ctx->last_error = "option value must be positive";
    return TORCOH_EBADARG;
  }
  if (n == "precision_digits") {
    if (value < 10 || value > 10000) {
      ctx->last_error = "precision_digits must be in [10, 10000]";
      return TORCOH_EBADARG;
    }
    ctx->caps.precision_digits = static_cast<int>(value);
  } else if (n == "max_entry_bits") {
    ctx->caps.max_entry_bits = static_cast<std::size_t>(value);
  } else if (n == "max_group_order") {
    ctx->caps.max_group_order = static_cast<int>(value);
  } else if (n == "max_bar_length") {
    ctx->caps.max_bar_length = static_cast<int>(value);
  } else if (n == "max_tensor_degree") {
    ctx->caps.max_tensor_degree = static_cast<int>(value);
  } else {
    ctx->last_error = std::string("unknown option \"") + name + "\"";
    return TORCOH_EBADARG;
  }
  return TORCOH_OK;
}

void torcoh_free(char* p) { std::free(p); }

int torcoh_run_job(torcoh_ctx* ctx, const char* job_json, char** out) {
  if (!check_out(ctx, job_json, out)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::Json j = torcoh::parse_json(job_json);
    if (!j.is_object())
      torcoh::fail(Errc::parse, "job document must be a JSON object");
    torcoh::JobSpec spec;
    if (!j.contains("command") || !j.at("command").is_string())
      torcoh::fail(Errc::parse, "job needs a string \"command\"");
    spec.command = j.at("command").get<std::string>();
    if (j.contains("params")) {
      if (!j.at("params").is_object())
        torcoh::fail(Errc::parse, "\"params\" must be an object");
      spec.params = j.at("params");
    }
    if (j.contains("seed")) {
      const torcoh::Json& s = j.at("seed");
      if (s.is_number_unsigned())
        spec.seed = s.get<std::uint64_t>();
      else if (s.is_number_integer() && s.get<long long>() >= 0)
        spec.seed = static_cast<std::uint64_t>(s.get<long long>());
      else if (s.is_string()) {
        try {
          spec.seed = std::stoull(s.get<std::string>());
        } catch (const std::exception&) {
          torcoh::fail(Errc::parse, "\"seed\" string is not a number");
        }
      } else {
        torcoh::fail(Errc::parse, "\"seed\" must be a nonnegative integer");
      }
    }
    if (j.contains("workers")) {
      if (!j.at("workers").is_number_integer())
        torcoh::fail(Errc::parse, "\"workers\" must be an integer");
      spec.workers = j.at("workers").get<int>();
    }
    if (j.contains("timings")) {
      if (!j.at("timings").is_boolean())
        torcoh::fail(Errc::parse, "\"timings\" must be a boolean");
      spec.timings = j.at("timings").get<bool>();
    }
    // Context options become the job's caps unless the job brought its own.
    if (!spec.params.contains("caps")) {
      const torcoh::Caps dflt;
      torcoh::Json caps = torcoh::Json::object();
      if (ctx->caps.max_entry_bits != dflt.max_entry_bits)
        caps["max_entry_bits"] = static_cast<long>(ctx->caps.max_entry_bits);
      if (ctx->caps.max_group_order != dflt.max_group_order)
        caps["max_group_order"] = ctx->caps.max_group_order;
      if (ctx->caps.max_bar_length != dflt.max_bar_length)
        caps["max_bar_length"] = ctx->caps.max_bar_length;
      if (ctx->caps.max_tensor_degree != dflt.max_tensor_degree)
        caps["max_tensor_degree"] = ctx->caps.max_tensor_degree;
      if (ctx->caps.precision_digits != dflt.precision_digits)
        caps["precision_digits"] = ctx->caps.precision_digits;
      if (!caps.empty()) spec.params["caps"] = caps;
    }
    const torcoh::ResultRecord rec = torcoh::run(spec);
    const int st = out_string(ctx, out, torcoh::dump_json(rec.document));
    if (st != TORCOH_OK) return st;
    if (rec.status != 0 && rec.document.contains("error"))
      ctx->last_error =
          rec.document.at("error").at("message").get<std::string>();
    return rec.status;
  });
}

int torcoh_snf_text(torcoh_ctx* ctx, const char* matrix_text,
                    char** divisors_csv) {
  if (!check_out(ctx, matrix_text, divisors_csv)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::SparseIntMatrix a =
        torcoh::SparseIntMatrix::from_exchange_text(matrix_text);
    const torcoh::SnfResult r =
        torcoh::snf(a, torcoh::SnfStrategy::fraction_free, ctx->caps);
    std::string csv;
    for (std::size_t i = 0; i < r.divisors.size(); ++i) {
      if (i) csv += ',';
      csv += torcoh::to_string(r.divisors[i]);
    }
    return out_string(ctx, divisors_csv, csv);
  });
}

int torcoh_rational_rank_text(torcoh_ctx* ctx, const char* matrix_text,
                              long* rank) {
  if (ctx == nullptr) return TORCOH_EBADARG;
  ctx->last_error.clear();
  if (matrix_text == nullptr || rank == nullptr) {
    ctx->last_error = "null argument";
    return TORCOH_EBADARG;
  }
  return guarded(ctx, [&]() {
    const torcoh::SparseIntMatrix a =
        torcoh::SparseIntMatrix::from_exchange_text(matrix_text);
    *rank = torcoh::rational_rank(a, ctx->caps);
    return TORCOH_OK;
  });
}

int torcoh_lens_complex(torcoh_ctx* ctx, long p, long q, char** complex_json,
                        char** module_json) {
  if (complex_json != nullptr) *complex_json = nullptr;
  if (module_json != nullptr) *module_json = nullptr;
  if (ctx == nullptr) return TORCOH_EBADARG;
  ctx->last_error.clear();
  if (complex_json == nullptr || module_json == nullptr) {
    ctx->last_error = "null argument";
    return TORCOH_EBADARG;
  }
  return guarded(ctx, [&]() {
    const std::string cj =
        torcoh::dump_json(torcoh::complex_to_json(torcoh::lens_complex(p, q)));
    const std::string mj =
        torcoh::dump_json(torcoh::module_to_json(torcoh::lens_module(p)));
    int st = out_string(ctx, complex_json, cj);
    if (st != TORCOH_OK) return st;
    st = out_string(ctx, module_json, mj);
    if (st != TORCOH_OK) {
      torcoh_free(*complex_json);
      *complex_json = nullptr;
    }
    return st;
  });
}

int torcoh_cohomology(torcoh_ctx* ctx, const char* complex_json,
                      const char* module_json, char** result_json) {
  if (!check_out(ctx, complex_json, result_json)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::GroupRingComplex gc =
        torcoh::complex_from_json(torcoh::parse_json(complex_json));
    const torcoh::CoeffModule mod =
        module_json != nullptr
            ? torcoh::module_from_json(torcoh::parse_json(module_json))
            : torcoh::trivial_module(gc.num_generators);
    const torcoh::CohomologyResult r =
        torcoh::cohomology(gc, mod, true, torcoh::SnfStrategy::fraction_free,
                           -1, ctx->caps);
    return out_string(ctx, result_json,
                      torcoh::dump_json(torcoh::cohomology_to_json(r)));
  });
}

int torcoh_torsion_cochain(torcoh_ctx* ctx, const char* cochain_json,
                           char** result_json) {
  if (!check_out(ctx, cochain_json, result_json)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    torcoh::CochainComplex cc =
        torcoh::cochain_from_json(torcoh::parse_json(cochain_json));
    cc.validate(true, ctx->caps);
    const torcoh::TorsionValue t = torcoh::reidemeister_torsion(cc, ctx->caps);
    return out_string(ctx, result_json,
                      torcoh::dump_json(torcoh::torsion_to_json(t)));
  });
}

int torcoh_verify_cochain(torcoh_ctx* ctx, const char* cochain_json,
                          char** report_json) {
  if (!check_out(ctx, cochain_json, report_json)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    torcoh::CochainComplex cc =
        torcoh::cochain_from_json(torcoh::parse_json(cochain_json));
    cc.validate(true, ctx->caps);
    const torcoh::VerifyReport rep = torcoh::verify_torsion_equals_cohomology(
        cc, torcoh::SnfStrategy::fraction_free, ctx->caps);
    return out_string(ctx, report_json,
                      torcoh::dump_json(torcoh::verify_to_json(rep)));
  });
}

int torcoh_random_acyclic(torcoh_ctx* ctx, const char* shape_csv,
                          uint64_t seed, long entry_bound,
                          char** cochain_json) {
  if (!check_out(ctx, shape_csv, cochain_json)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    std::vector<int> shape;
    const std::string text = shape_csv;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string tok =
          text.substr(pos, comma == std::string::npos ? std::string::npos
                                                      : comma - pos);
      const torcoh::Int v = torcoh::parse_int(tok);
      if (v < 0 || v > 1000000)
        torcoh::fail(Errc::bad_argument, "shape entry out of range");
      shape.push_back(static_cast<int>(v.get_si()));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    const torcoh::CochainComplex cc =
        torcoh::random_acyclic(shape, seed, entry_bound, ctx->caps);
    return out_string(ctx, cochain_json,
                      torcoh::dump_json(torcoh::cochain_to_json(cc)));
  });
}

int torcoh_weyl_dim(torcoh_ctx* ctx, const char* weight_spec, long m,
                    char** dim_decimal) {
  if (!check_out(ctx, weight_spec, dim_decimal)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    if (m < 0) torcoh::fail(Errc::bad_argument, "m must be >= 0");
    const torcoh::HighestWeight w = torcoh::parse_weight(weight_spec);
    return out_string(
        ctx, dim_decimal,
        torcoh::to_string(torcoh::weyl_dim(torcoh::scale_weight(w, m))));
  });
}

int torcoh_theta_twist(torcoh_ctx* ctx, const char* weight_spec,
                       char** twisted_spec) {
  if (!check_out(ctx, weight_spec, twisted_spec)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::HighestWeight w = torcoh::parse_weight(weight_spec);
    return out_string(ctx, twisted_spec, torcoh::theta_twist(w).str());
  });
}

int torcoh_rho_m_rank(torcoh_ctx* ctx, int n, int d, long m,
                      char** rank_decimal) {
  if (ctx == nullptr) return TORCOH_EBADARG;
  ctx->last_error.clear();
  if (rank_decimal == nullptr) return TORCOH_EBADARG;
  *rank_decimal = nullptr;
  return guarded(ctx, [&]() {
    return out_string(ctx, rank_decimal,
                      torcoh::to_string(torcoh::rho_m_rank(n, d, m)));
  });
}

int torcoh_c_pq(torcoh_ctx* ctx, int p, int q, const char* vol_xd,
                char** value_decimal) {
  if (!check_out(ctx, vol_xd, value_decimal)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::Real v = torcoh::c_pq(
        p, q, torcoh::Real::parse(vol_xd, ctx->caps.precision_digits),
        ctx->caps);
    return out_string(ctx, value_decimal, v.str());
  });
}

int torcoh_fit_growth(torcoh_ctx* ctx, const char* series_csv, int degree,
                      char** fit_json) {
  if (!check_out(ctx, series_csv, fit_json)) return TORCOH_EBADARG;
  return guarded(ctx, [&]() {
    const torcoh::GrowthSeries s = torcoh::series_from_csv(series_csv);
    const torcoh::FitResult f = torcoh::fit_growth(s, degree, ctx->caps);
    const torcoh::Json j{{"leading_coeff", f.leading_coeff.str()},
                         {"second_coeff", f.second_coeff.str()},
                         {"residual_rel", f.residual_rel.str()},
                         {"ill_conditioned", f.ill_conditioned}};
    return out_string(ctx, fit_json, torcoh::dump_json(j));
  });
}

}  // extern "C"
