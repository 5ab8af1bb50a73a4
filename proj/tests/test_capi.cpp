#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <virfock.h>

namespace {
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  vf_string_free(s);
  return out;
}

std::string surd_text(const vf_surd* s) {
  char* t = nullptr;
  REQUIRE(vf_surd_str(s, &t) == VF_OK);
  return take(t);
}
}  // namespace

TEST_CASE("surd arithmetic through the c interface") {
  vf_surd *a = nullptr, *b = nullptr, *r = nullptr;
  REQUIRE(vf_surd_parse("1/2+1/3*sqrt(2)", &a) == VF_OK);
  REQUIRE(vf_surd_parse("1/2-1/3*sqrt(2)", &b) == VF_OK);

  REQUIRE(vf_surd_mul(a, b, &r) == VF_OK);
  CHECK(surd_text(r) == "1/36");  // 1/4 - 2/9
  vf_surd_free(r);

  REQUIRE(vf_surd_add(a, b, &r) == VF_OK);
  CHECK(surd_text(r) == "1");
  vf_surd_free(r);

  REQUIRE(vf_surd_sub(a, b, &r) == VF_OK);
  int sign = 0;
  REQUIRE(vf_surd_sign(r, &sign) == VF_OK);
  CHECK(sign == 1);
  vf_surd_free(r);

  REQUIRE(vf_surd_div(a, a, &r) == VF_OK);
  vf_surd* one = nullptr;
  REQUIRE(vf_surd_from_rational(1, 1, &one) == VF_OK);
  int eq = 0;
  REQUIRE(vf_surd_equal(r, one, &eq) == VF_OK);
  CHECK(eq == 1);
  vf_surd_free(r);
  vf_surd_free(one);
  vf_surd_free(a);
  vf_surd_free(b);
}

TEST_CASE("error codes and messages") {
  vf_surd* s = nullptr;
  CHECK(vf_surd_parse("not a number", &s) == VF_ERR_PARSE);
  CHECK(std::strlen(vf_last_error()) > 0);
  CHECK(vf_surd_parse(nullptr, &s) == VF_ERR_INVALID_ARG);
  CHECK(vf_surd_parse("1/2", nullptr) == VF_ERR_INVALID_ARG);

  vf_surd *r2 = nullptr, *r3 = nullptr, *out = nullptr;
  REQUIRE(vf_surd_parse("0+1*sqrt(2)", &r2) == VF_OK);
  REQUIRE(vf_surd_parse("0+1*sqrt(3)", &r3) == VF_OK);
  CHECK(vf_surd_add(r2, r3, &out) == VF_ERR_RADICAND_MISMATCH);
  vf_surd_free(r2);
  vf_surd_free(r3);

  vf_surd* zero = nullptr;
  REQUIRE(vf_surd_from_rational(0, 1, &zero) == VF_OK);
  vf_surd* one = nullptr;
  REQUIRE(vf_surd_from_rational(1, 1, &one) == VF_OK);
  CHECK(vf_surd_div(one, zero, &out) == VF_ERR_DOMAIN);
  vf_surd_free(zero);
  vf_surd_free(one);

  int occ_bad[2] = {1, 1};  // repeated occupation
  vf_state* st = nullptr;
  CHECK(vf_state_monomial(occ_bad, 2, &st) == VF_ERR_DOMAIN);
  int occ_neg[1] = {-1};
  CHECK(vf_state_monomial(occ_neg, 1, &st) == VF_ERR_DOMAIN);

  vf_series* ser = nullptr;
  CHECK(vf_series_product("bogus", 8, 0, &ser) == VF_ERR_DOMAIN);
}

TEST_CASE("state operations through the c interface") {
  vf_state* vac = nullptr;
  REQUIRE(vf_state_monomial(nullptr, 0, &vac) == VF_OK);

  // h[-2]|0> = {0,3} - {1,2}
  vf_state* h2 = nullptr;
  REQUIRE(vf_state_apply("h[-2]", vac, &h2) == VF_OK);
  int occ03[2] = {0, 3};
  int occ12[2] = {1, 2};
  vf_surd* c = nullptr;
  REQUIRE(vf_state_coeff(h2, occ03, 2, &c) == VF_OK);
  CHECK(surd_text(c) == "1");
  vf_surd_free(c);
  REQUIRE(vf_state_coeff(h2, occ12, 2, &c) == VF_OK);
  CHECK(surd_text(c) == "-1");
  vf_surd_free(c);

  // applying the annihilating mode gives zero
  vf_state* z = nullptr;
  REQUIRE(vf_state_apply("h[2]", vac, &z) == VF_OK);
  int is_zero = 0;
  REQUIRE(vf_state_is_zero(z, &is_zero) == VF_OK);
  CHECK(is_zero == 1);
  vf_state_free(z);

  // (h[-2] - h[-2])|0> = 0 via scale and add
  vf_surd* minus1 = nullptr;
  REQUIRE(vf_surd_from_rational(-1, 1, &minus1) == VF_OK);
  vf_state* neg = nullptr;
  REQUIRE(vf_state_scale(h2, minus1, &neg) == VF_OK);
  vf_state* sum = nullptr;
  REQUIRE(vf_state_add(h2, neg, &sum) == VF_OK);
  REQUIRE(vf_state_is_zero(sum, &is_zero) == VF_OK);
  CHECK(is_zero == 1);
  vf_state_free(sum);
  vf_state_free(neg);
  vf_surd_free(minus1);

  // charge-sector minima and the lambda family text form
  vf_state* v2 = nullptr;
  REQUIRE(vf_state_vacuum_like(2, &v2) == VF_OK);
  char* txt = nullptr;
  REQUIRE(vf_state_str(v2, &txt) == VF_OK);
  CHECK(take(txt) == "(1)*phi[3]phi[1]|0>");
  vf_state* lv = nullptr;
  REQUIRE(vf_state_apply("L[1;lambda=1/2;b=0]", v2, &lv) == VF_OK);
  REQUIRE(vf_state_is_zero(lv, &is_zero) == VF_OK);
  CHECK(is_zero == 1);
  vf_state_free(lv);
  vf_state_free(v2);

  CHECK(vf_state_apply("phi[1]", vac, &z) == VF_ERR_PARSE);
  vf_state_free(h2);
  vf_state_free(vac);
}

TEST_CASE("series builders and equality") {
  vf_series* trace = nullptr;
  REQUIRE(vf_series_trace("full", 24, 3, &trace) == VF_OK);
  vf_series* jac1 = nullptr;
  REQUIRE(vf_series_product("jac1", 24, 3, &jac1) == VF_OK);
  int eq = 0;
  REQUIRE(vf_series_equal(trace, jac1, &eq) == VF_OK);
  CHECK(eq == 1);

  char* coeff = nullptr;
  REQUIRE(vf_series_coeff(jac1, 2, -1, &coeff) == VF_OK);
  CHECK(take(coeff) == "1");  // the single occupation {0}: energy 1/2, dg -1

  vf_series* even = nullptr;
  REQUIRE(vf_series_trace("even", 24, 0, &even) == VF_OK);
  vf_series* ising0 = nullptr;
  REQUIRE(vf_series_sum("char-half-even", 24, 0, &ising0) == VF_OK);
  REQUIRE(vf_series_equal(even, ising0, &eq) == VF_OK);
  CHECK(eq == 1);

  vf_series* charged = nullptr;
  REQUIRE(vf_series_trace("1", 24, 2, &charged) == VF_OK);
  REQUIRE(vf_series_coeff(charged, 6, 1, &coeff) == VF_OK);
  CHECK(take(coeff) == "1");  // v_1 = {1} at energy 3/2, charge 1
  REQUIRE(vf_series_coeff(charged, 6, 0, &coeff) == VF_OK);
  CHECK(take(coeff) == "0");

  char* js = nullptr;
  REQUIRE(vf_series_json(jac1, &js) == VF_OK);
  CHECK(take(js).find("coeff") != std::string::npos);
  char* csv = nullptr;
  REQUIRE(vf_series_csv(jac1, &csv) == VF_OK);
  CHECK(!take(csv).empty());

  vf_series_free(charged);
  vf_series_free(ising0);
  vf_series_free(even);
  vf_series_free(jac1);
  vf_series_free(trace);
}

TEST_CASE("run driver") {
  char* report = nullptr;
  int verdict = -1;
  REQUIRE(vf_run("{\"command\":\"jacobi\",\"q_order\":24,\"z_window\":3}",
                 &report, &verdict) == VF_OK);
  CHECK(verdict == 1);
  CHECK(take(report).find("jacobi-triple-product") != std::string::npos);

  // lattice-point singular run: exact kernels are not monomials, verdict 0
  REQUIRE(vf_run("{\"command\":\"singular\",\"b\":\"0+1/2*sqrt(2)\","
                 "\"max_level\":4,\"energy_cutoff\":24,\"format\":\"json\"}",
                 &report, &verdict) == VF_OK);
  CHECK(verdict == 0);
  CHECK(take(report).find("staircase-monomial-match") != std::string::npos);

  CHECK(vf_run("{\"command\":\"jacobi\",\"format\":\"yaml\"}", &report,
               &verdict) == VF_ERR_PARSE);
  CHECK(vf_run("not json", &report, &verdict) == VF_ERR_PARSE);
  CHECK(vf_run("{}", &report, &verdict) == VF_ERR_PARSE);
  CHECK(vf_run(nullptr, &report, &verdict) == VF_ERR_INVALID_ARG);
}
