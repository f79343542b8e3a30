#include "orbiquot.h"

#include <cstring>
#include <new>

#include "report.hpp"

using namespace orbiquot;

struct oq_matrix {
  WeightMatrix m;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

ReportOptions to_options(const oq_options* opts) {
  ReportOptions r;
  if (opts) {
    r.tol = opts->tol;
    r.seeds = opts->seeds;
    r.max_iter = opts->max_iter;
    r.seed = opts->seed;
    r.json = opts->json != 0;
  }
  return r;
}

template <typename Fn>
int run_guarded(Fn&& fn, char** out, char** err) {
  try {
    const RunResult res = fn();
    if (out) *out = dup_string(res.output);
    return res.status == 0 ? OQ_OK : OQ_FAIL;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return OQ_EINTERNAL;
  }
}

}  // namespace

extern "C" {

oq_options oq_default_options(void) {
  oq_options o;
  o.tol = 1e-10;
  o.seeds = 8;
  o.max_iter = 500;
  o.seed = 1;
  o.json = 0;
  return o;
}

int oq_matrix_parse(const char* text, oq_matrix** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return OQ_EUSAGE;
  }
  try {
    *out = new oq_matrix{parse_matrix(text)};
    return OQ_OK;
  } catch (const ShapeError& e) {
    set_err(err, e.what());
    return OQ_ESHAPE;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return OQ_EPARSE;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return OQ_EINTERNAL;
  }
}

void oq_matrix_free(oq_matrix* m) { delete m; }

int oq_matrix_torus_rank(const oq_matrix* m) {
  if (!m) return 0;
  return std::holds_alternative<ThetaMatrix>(m->m) ? 3 : 2;
}

int oq_run_check(const oq_matrix* m, const oq_options* opts, char** out,
                 char** err) {
  if (!m) {
    set_err(err, "null matrix");
    return OQ_EUSAGE;
  }
  return run_guarded([&] { return run_check(m->m, to_options(opts)); }, out,
                     err);
}

int oq_run_catalog(const oq_matrix* m, const oq_options* opts, char** out,
                   char** err) {
  if (!m) {
    set_err(err, "null matrix");
    return OQ_EUSAGE;
  }
  return run_guarded([&] { return run_catalog(m->m, to_options(opts)); }, out,
                     err);
}

int oq_run_sample(const oq_matrix* m, const oq_options* opts, char** out,
                  char** err) {
  if (!m) {
    set_err(err, "null matrix");
    return OQ_EUSAGE;
  }
  return run_guarded([&] { return run_sample(m->m, to_options(opts)); }, out,
                     err);
}

int oq_run_verify(const oq_options* opts, char** out, char** err) {
  return run_guarded([&] { return run_verify(to_options(opts)); }, out, err);
}

void oq_string_free(char* s) { delete[] s; }

const char* oq_version(void) { return kVersion; }

}  // extern "C"
