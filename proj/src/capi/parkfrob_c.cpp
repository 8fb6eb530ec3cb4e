#include "parkfrob/parkfrob.h"

#include <new>
#include <string>

#include "parkfrob/config.hpp"
#include "parkfrob/emit.hpp"
#include "parkfrob/errors.hpp"

struct pf_context {
  parkfrob::RunConfig cfg;
  std::string last_error;
};

struct pf_result {
  std::string text;
};

namespace {

using namespace parkfrob;

template <class F>
pf_status guarded(pf_context* ctx, F&& body) {
  if (!ctx) return PF_ERR_INPUT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return e.kind() == ErrorKind::identity ? PF_ERR_IDENTITY : PF_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return PF_ERR_OTHER;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return PF_ERR_OTHER;
  } catch (...) {
    ctx->last_error = "unknown failure";
    return PF_ERR_OTHER;
  }
}

ComputeOptions options(const RunConfig& cfg) {
  cfg.apply_caps();
  ComputeOptions opt;
  opt.workers = cfg.workers;
  opt.cache_dir = cfg.cache_dir;
  opt.check = cfg.check;
  return opt;
}

std::string str(const char* s, const char* what) {
  if (!s) throw input_error(std::string(what) + " is required");
  return s;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return "1.0.0"; }

pf_status pf_context_create(pf_context** out) {
  if (!out) return PF_ERR_INPUT;
  *out = new (std::nothrow) pf_context();
  return *out ? PF_OK : PF_ERR_OTHER;
}

void pf_context_destroy(pf_context* ctx) { delete ctx; }

pf_status pf_context_set(pf_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    ctx->cfg.set(str(key, "key"), str(value, "value"));
    return PF_OK;
  });
}

pf_status pf_context_load_config(pf_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    load_config_file(ctx->cfg, str(path, "path"));
    return PF_OK;
  });
}

const char* pf_context_last_error(const pf_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

pf_status pf_enumerate(pf_context* ctx, int n, int k, int N, const char* kind, const int* eta,
                       int eta_len, pf_line_fn fn, void* user) {
  return guarded(ctx, [&] {
    if (!fn) throw input_error("a line callback is required");
    if (eta_len < 0 || (eta_len > 0 && !eta)) throw input_error("bad eta");
    options(ctx->cfg);
    const Grid g = Grid::from_nk(n, k, N);
    const std::vector<int> content(eta, eta + eta_len);
    emit_enumeration(g, parse_kind(str(kind, "kind")), content, ctx->cfg.format,
                     [&](const std::string& line) { return fn(line.c_str(), user) == 0; });
    return PF_OK;
  });
}

pf_status pf_frob(pf_context* ctx, int n, int k, const char* side, pf_result** out) {
  return guarded(ctx, [&] {
    if (!out) throw input_error("result pointer is required");
    *out = nullptr;
    const ComputeOptions opt = options(ctx->cfg);
    const FrobResult r = frob(parse_side(str(side, "side")), n, k, opt);
    *out = new pf_result{format_frob(r, ctx->cfg.format)};
    return PF_OK;
  });
}

pf_status pf_verify(pf_context* ctx, const char* suite, int n_max, int K_max, pf_result** out) {
  return guarded(ctx, [&] {
    if (!out) throw input_error("result pointer is required");
    *out = nullptr;
    const ComputeOptions opt = options(ctx->cfg);
    const Suite s = parse_suite(str(suite, "suite"));
    const auto verdicts = run_suite(s, VerifyRange{std::max(n_max, 0), std::max(K_max, 0)}, opt);
    *out = new pf_result{format_verdicts(verdicts, ctx->cfg.format)};
    for (const Verdict& v : verdicts) {
      if (!v.equal) return PF_VERDICT_FALSE;
    }
    return PF_OK;
  });
}

pf_status pf_cache_clear(pf_context* ctx, int* removed) {
  return guarded(ctx, [&] {
    const int r = clear_cache(ctx->cfg.cache_dir);
    if (removed) *removed = r;
    return PF_OK;
  });
}

const char* pf_result_text(const pf_result* r) { return r ? r->text.c_str() : ""; }

void pf_result_destroy(pf_result* r) { delete r; }

}  // extern "C"
