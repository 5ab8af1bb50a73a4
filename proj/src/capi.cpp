#include "virfock.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "virfock/operators.hpp"
#include "virfock/rep.hpp"
#include "virfock/suites.hpp"

using namespace virfock;

struct vf_surd {
  Surd v;
};
struct vf_state {
  State v;
};
struct vf_series {
  CharSeries v;
  explicit vf_series(CharSeries s) : v(std::move(s)) {}
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(VF_ERR_PARSE, e.what());
  } catch (const RadicandMismatch& e) {
    return fail(VF_ERR_RADICAND_MISMATCH, e.what());
  } catch (const DomainError& e) {
    return fail(VF_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(VF_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int require(bool cond, const char* what) {
  if (!cond) return fail(VF_ERR_INVALID_ARG, what);
  return VF_OK;
}

BasisVector vector_from(const int* occ, size_t len) {
  std::vector<int> v(occ, occ + len);
  return basis_from_json_array(v);
}

}  // namespace

extern "C" {

const char* vf_last_error(void) { return g_last_error.c_str(); }

void vf_string_free(char* s) { std::free(s); }

int vf_surd_parse(const char* text, vf_surd** out) {
  if (int rc = require(text && out, "null argument")) return rc;
  return guarded([&] {
    *out = new vf_surd{Surd::parse(text)};
    return VF_OK;
  });
}

int vf_surd_from_rational(long num, long den, vf_surd** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    *out = new vf_surd{Surd(r)};
    return VF_OK;
  });
}

int vf_surd_str(const vf_surd* s, char** out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(s->v.str());
    return VF_OK;
  });
}

#define VF_SURD_BINOP(name, op)                                      \
  int name(const vf_surd* a, const vf_surd* b, vf_surd** out) {      \
    if (int rc = require(a && b && out, "null argument")) return rc; \
    return guarded([&] {                                             \
      *out = new vf_surd{a->v op b->v};                              \
      return VF_OK;                                                  \
    });                                                              \
  }

VF_SURD_BINOP(vf_surd_add, +)
VF_SURD_BINOP(vf_surd_sub, -)
VF_SURD_BINOP(vf_surd_mul, *)
VF_SURD_BINOP(vf_surd_div, /)
#undef VF_SURD_BINOP

int vf_surd_sign(const vf_surd* s, int* out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = s->v.sign();
    return VF_OK;
  });
}

int vf_surd_equal(const vf_surd* a, const vf_surd* b, int* out) {
  if (int rc = require(a && b && out, "null argument")) return rc;
  *out = (a->v == b->v) ? 1 : 0;
  return VF_OK;
}

void vf_surd_free(vf_surd* s) { delete s; }

int vf_state_monomial(const int* occupations, size_t len, vf_state** out) {
  if (int rc = require(out && (len == 0 || occupations), "null argument"))
    return rc;
  return guarded([&] {
    *out = new vf_state{State::monomial(vector_from(occupations, len))};
    return VF_OK;
  });
}

int vf_state_vacuum_like(int charge, vf_state** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new vf_state{State::monomial(vacuum_like(charge))};
    return VF_OK;
  });
}

int vf_state_apply(const char* op_text, const vf_state* s, vf_state** out) {
  if (int rc = require(op_text && s && out, "null argument")) return rc;
  return guarded([&] {
    OperatorSpec op = OperatorSpec::parse(op_text);
    *out = new vf_state{apply_op(op, s->v)};
    return VF_OK;
  });
}

int vf_state_add(const vf_state* a, const vf_state* b, vf_state** out) {
  if (int rc = require(a && b && out, "null argument")) return rc;
  return guarded([&] {
    *out = new vf_state{a->v + b->v};
    return VF_OK;
  });
}

int vf_state_scale(const vf_state* s, const vf_surd* c, vf_state** out) {
  if (int rc = require(s && c && out, "null argument")) return rc;
  return guarded([&] {
    State r = s->v;
    r *= c->v;
    *out = new vf_state{std::move(r)};
    return VF_OK;
  });
}

int vf_state_is_zero(const vf_state* s, int* out) {
  if (int rc = require(s && out, "null argument")) return rc;
  *out = s->v.is_zero() ? 1 : 0;
  return VF_OK;
}

int vf_state_coeff(const vf_state* s, const int* occupations, size_t len,
                   vf_surd** out) {
  if (int rc = require(s && out && (len == 0 || occupations), "null argument"))
    return rc;
  return guarded([&] {
    *out = new vf_surd{s->v.coeff(vector_from(occupations, len))};
    return VF_OK;
  });
}

int vf_state_str(const vf_state* s, char** out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(s->v.str());
    return VF_OK;
  });
}

void vf_state_free(vf_state* s) { delete s; }

int vf_series_product(const char* name, long q_order, int z_window,
                      vf_series** out) {
  if (int rc = require(name && out, "null argument")) return rc;
  return guarded([&] {
    std::string n = name;
    ProductForm which;
    if (n == "jac1")
      which = ProductForm::Jac1TwoVariable;
    else if (n == "euler-even")
      which = ProductForm::EulerEven;
    else if (n == "neg-q-half")
      which = ProductForm::NegQHalf;
    else
      throw DomainError("unknown product form: " + n);
    *out = new vf_series(product_form(which, {q_order, z_window}));
    return VF_OK;
  });
}

int vf_series_sum(const char* name, long q_order, int z_window,
                  vf_series** out) {
  if (int rc = require(name && out, "null argument")) return rc;
  return guarded([&] {
    std::string n = name;
    SumForm which;
    if (n == "jac2")
      which = SumForm::Jac2TwoVariable;
    else if (n == "jacid-theta")
      which = SumForm::JacidTheta;
    else if (n == "char-half-even")
      which = SumForm::CharHalfEven;
    else if (n == "char-half-odd")
      which = SumForm::CharHalfOdd;
    else
      throw DomainError("unknown sum form: " + n);
    *out = new vf_series(sum_form(which, {q_order, z_window}));
    return VF_OK;
  });
}

int vf_series_trace(const char* sector, long q_order, int z_window,
                    vf_series** out) {
  if (int rc = require(sector && out, "null argument")) return rc;
  return guarded([&] {
    std::string n = sector;
    SectorSpec spec;
    spec.weight = OperatorSpec::vir_half(0);
    if (n == "full") {
      spec.selector = SectorSpec::Selector::Full;
      spec.include_charge_variable = true;
    } else if (n == "even" || n == "odd") {
      spec.selector = SectorSpec::Selector::Parity;
      spec.parameter = (n == "odd") ? 1 : 0;
    } else {
      spec.selector = SectorSpec::Selector::Charge;
      spec.include_charge_variable = true;
      size_t pos = 0;
      spec.parameter = std::stoi(n, &pos);
      if (pos != n.size()) throw ParseError("bad sector: " + n);
    }
    *out = new vf_series(trace_character(spec, q_order, z_window));
    return VF_OK;
  });
}

int vf_series_coeff(const vf_series* s, long q_quarters, int z_exp,
                    char** out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(rat_to_string(s->v.coeff(q_quarters, z_exp)));
    return VF_OK;
  });
}

int vf_series_equal(const vf_series* a, const vf_series* b, int* out) {
  if (int rc = require(a && b && out, "null argument")) return rc;
  *out = a->v.first_discrepancy(b->v).has_value() ? 0 : 1;
  return VF_OK;
}

int vf_series_json(const vf_series* s, char** out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(s->v.to_json());
    return VF_OK;
  });
}

int vf_series_csv(const vf_series* s, char** out) {
  if (int rc = require(s && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(s->v.to_csv());
    return VF_OK;
  });
}

void vf_series_free(vf_series* s) { delete s; }

int vf_run(const char* config_json, char** report_out, int* verdict_out) {
  if (int rc = require(config_json && report_out && verdict_out,
                       "null argument"))
    return rc;
  return guarded([&]() -> int {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad config json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("command") ||
        !j["command"].is_string())
      throw ParseError("config must be an object with a string 'command'");
    RunConfig cfg;
    cfg.command = j["command"].get<std::string>();
    auto geti = [&](const char* key, auto& slot) {
      if (j.contains(key)) {
        if (!j[key].is_number_integer())
          throw ParseError(std::string(key) + " must be an integer");
        slot = j[key].template get<long>();
      }
    };
    geti("energy_cutoff", cfg.energy_cutoff);
    geti("q_order", cfg.q_order);
    geti("z_window", cfg.z_window);
    geti("mode_window", cfg.mode_window);
    geti("max_level", cfg.max_level);
    geti("j_max", cfg.j_max);
    geti("discrete_max_m", cfg.discrete_max_m);
    if (j.contains("lambda")) cfg.lambda_text = j["lambda"].get<std::string>();
    if (j.contains("b")) cfg.b_text = j["b"].get<std::string>();
    if (j.contains("sector")) {
      if (!j["sector"].is_number_integer())
        throw ParseError("sector must be an integer");
      cfg.sector = j["sector"].get<int>();
    }
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (cfg.format != "plain" && cfg.format != "json" && cfg.format != "csv")
      throw ParseError("format must be plain, json, or csv");
    Report rep = run_suite(cfg);
    *report_out = dup_string(rep.render(cfg.format));
    *verdict_out = rep.verdict() ? 1 : 0;
    return VF_OK;
  });
}

}  // extern "C"
