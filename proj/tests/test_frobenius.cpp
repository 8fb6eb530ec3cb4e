#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "parkfrob/config.hpp"
#include "parkfrob/emit.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/frobenius.hpp"
#include "parkfrob/macdonald.hpp"
#include "parkfrob/verify.hpp"

using namespace parkfrob;
using testutil::q;
using testutil::t;

namespace {

ComputeOptions fast() {
  ComputeOptions o;
  o.check = false;
  return o;
}

std::vector<Grid> grids_up_to(int K_max) {
  return grids_in_range(VerifyRange{0, K_max});
}

// Sum over word parking functions of content eta (any order of parts).
LaurentQT wpf_sum(const Grid& g, const std::vector<int>& eta, bool weak) {
  LaurentQT s;
  for_each_wpf(g, eta, weak, [&](const WordParkingFunction& w) {
    const PfStatistics st = word_statistics(w);
    const int d = weak ? dinv_prime(w) : st.dinv;
    s += LaurentQT::monomial(1, d, st.area);
  });
  return s;
}

int binom2(int a) { return a * (a - 1) / 2; }

int top_q(const SymFunc& f) {
  int m = 0;
  for (const auto& [p, c] : f.terms()) m = std::max(m, c.max_q());
  return m;
}

}  // namespace

TEST_CASE("e_shuffle small cases") {
  CHECK(change_basis(e_shuffle(Grid::from_Kk(2, 1), DinvVariant::dinv), Basis::elementary) ==
        SymFunc::e(Partition{2}));
  const SymFunc e22 = change_basis(e_shuffle(Grid::from_Kk(2, 2), DinvVariant::dinv), Basis::schur);
  CHECK(e22 == SymFunc::s(Partition{2}) + (q + t) * SymFunc::s(Partition{1, 1}));
  CHECK(e22 == change_basis(apply_nabla(2), Basis::schur));
  CHECK(change_basis(e_shuffle(Grid::from_Kk(3, 3), DinvVariant::dinv), Basis::schur) ==
        change_basis(apply_nabla(3), Basis::schur));
}

TEST_CASE("omega relates the two variants, K <= 8") {
  for (const Grid& g : grids_up_to(8)) {
    CAPTURE(g.n);
    CAPTURE(g.k);
    const SymFunc strict = e_shuffle(g, DinvVariant::dinv);
    const SymFunc weak = e_shuffle(g, DinvVariant::dinv_prime);
    CHECK(strict.degree() == g.K());
    CHECK(omega_involution(strict) == weak);
  }
}

TEST_CASE("<h_eta, E> does not depend on the order of eta") {
  for (const Grid& g : grids_up_to(6)) {
    const SymFunc m = change_basis(e_shuffle(g, DinvVariant::dinv), Basis::monomial);
    const SymFunc mw = change_basis(e_shuffle(g, DinvVariant::dinv_prime), Basis::monomial);
    for (const Partition& p : partitions_of(g.K())) {
      std::vector<int> eta = p.parts();
      const LaurentQT want = m.coeff(p);
      const LaurentQT want_w = mw.coeff(p);
      do {
        CHECK(wpf_sum(g, eta, false) == want);
        CHECK(wpf_sum(g, eta, true) == want_w);
      } while (std::next_permutation(eta.begin(), eta.end()));
    }
  }
}

TEST_CASE("frob_X") {
  CHECK(change_basis(frob_X(2, 2).value, Basis::schur) ==
        q * SymFunc::s(Partition{1, 1}) + (1 + q * t) * SymFunc::s(Partition{2}));
  CHECK(change_basis(frob_X(2, 1).value, Basis::schur) == SymFunc::s(Partition{2}));
  CHECK(frob_X(3, 2).provenance.find("matches") != std::string::npos);
  CHECK(frob_X(3, 2, fast()).provenance.find("matches") == std::string::npos);
}

TEST_CASE("Hilbert series of frob_X, K <= 8") {
  for (const Grid& g : grids_up_to(8)) {
    const SymFunc m = change_basis(frob_X(g.n, g.k, fast()).value, Basis::monomial);
    LaurentQT want;
    for_each_pf(g, [&](const ParkingFunction& pf) {
      const PfStatistics st = statistics(pf);
      want += LaurentQT::monomial(1, g.delta() - st.dinv, st.area);
    });
    CHECK(m.coeff(Partition(std::vector<int>(g.K(), 1))) == want);
  }
}

TEST_CASE("frob_Y") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(frob_Y(n, n).value == frob_X(n, n).value);
  }
  CHECK(change_basis(frob_Y(2, 1).value, Basis::schur) == SymFunc::s(Partition{2}));
  const FrobResult y32 = frob_Y(3, 2);
  CHECK(y32.value.degree() == 3);
  CHECK(y32.provenance.find("Delta'") != std::string::npos);
}

TEST_CASE("Schur positivity and degree bookkeeping") {
  for (const Grid& g : grids_up_to(8)) {
    CAPTURE(g.n);
    CAPTURE(g.k);
    const SymFunc x = change_basis(frob_X(g.n, g.k, fast()).value, Basis::schur);
    const SymFunc y = change_basis(frob_Y(g.n, g.k, fast()).value, Basis::schur);
    CHECK(x.degree() == g.K());
    CHECK(y.degree() == g.n);
    for (const SymFunc* f : {&x, &y}) {
      for (const auto& [p, c] : f->terms()) {
        CHECK(c.has_nonnegative_coefficients());
        CHECK(c.is_polynomial());
      }
    }
    CHECK(top_q(x) == g.delta());
    CHECK(top_q(y) == binom2(g.k) + (g.k - 1) * (g.n - g.k));
  }
}

TEST_CASE("skewing identities") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const IdentityReport& r : verify_skewing(n, k, fast())) {
        CAPTURE(r.identity);
        CHECK(r.equal);
      }
    }
  }
  // k = n: the first identity is nabla e_n = E_{n,n}.
  const auto r = verify_skewing(3, 3, fast());
  CHECK(r[0].lhs == apply_nabla(3));
}

TEST_CASE("fixed point census") {
  const Census c22 = fixed_point_census(2, 2);
  CHECK(c22.parking_functions == 3);
  CHECK(c22.gamma_restricted == 3);
  CHECK(c22.admissible_orbits == 3);
  CHECK(c22.stacked_pfs == 3);
  for (const Grid& g : grids_up_to(8)) CHECK(fixed_point_census(g.n, g.k).consistent());
}

TEST_CASE("cache") {
  const auto dir = std::filesystem::temp_directory_path() / "parkfrob_test_cache";
  std::filesystem::remove_all(dir);
  ComputeOptions o = fast();
  o.cache_dir = dir.string();
  const FrobResult a = frob_X(3, 2, o);
  CHECK(clear_cache(o.cache_dir) == 1);
  frob_X(3, 2, o);
  frob(Side::E, 3, 2, o);
  // A tampered entry is served back, which shows the cache is read.
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(e.path());
    Json j = Json::parse(in);
    in.close();
    j["provenance"] = "tampered";
    std::ofstream(e.path()) << j.dump();
  }
  CHECK(frob_X(3, 2, o).provenance == "tampered");
  CHECK(frob_X(3, 2, o).value == a.value);
  CHECK(frob_X(3, 2, fast()).provenance != "tampered");
  CHECK(clear_cache(o.cache_dir) == 2);
  CHECK_THROWS_AS(clear_cache(""), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify suites") {
  CHECK(grids_in_range({2, 0}).size() == 3);
  CHECK(grids_in_range({0, 4}).size() == 8);
  for (Suite s : {Suite::shuffle, Suite::skewing, Suite::cells, Suite::census}) {
    const auto vs = run_suite(s, {3, 0}, fast());
    CHECK_FALSE(vs.empty());
    for (const Verdict& v : vs) {
      CAPTURE(v.identity);
      CHECK(v.equal);
      const Json j = to_json(v);
      CHECK(j["params"]["K"] == v.grid.K());
    }
  }
  CHECK(parse_suite("all") == Suite::all);
  CHECK_THROWS_AS(parse_suite("bogus"), Error);
  CHECK(check_cells(Grid::from_nk(6, 4, 3)) == std::pair<std::int64_t, std::int64_t>{count_pfs(Grid::from_nk(6, 4)), 0});
}

TEST_CASE("config") {
  RunConfig c;
  c.set("format", "csv");
  c.set("workers", "3");
  c.set("check", "true");
  CHECK(c.format == Format::csv);
  CHECK(c.workers == 3);
  CHECK(c.check);
  CHECK_THROWS_AS(c.set("workers", "0"), Error);
  CHECK_THROWS_AS(c.set("k_cap", "x"), Error);
  CHECK_THROWS_AS(c.set("nope", "1"), Error);
  const auto path = std::filesystem::temp_directory_path() / "parkfrob_test.conf";
  std::ofstream(path) << "# comment\n\nk_cap = 9\ncache = /tmp/pfc\n";
  RunConfig d;
  load_config_file(d, path.string());
  CHECK(d.k_cap == 9);
  CHECK(d.cache_dir == "/tmp/pfc");
  std::ofstream(path) << "k_cap\n";
  CHECK_THROWS_AS(load_config_file(d, path.string()), Error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config_file(d, "/nonexistent/parkfrob.conf"), Error);
}

TEST_CASE("emission") {
  std::vector<std::string> lines;
  const LineSink sink = [&](const std::string& l) {
    lines.push_back(l);
    return true;
  };
  emit_enumeration(Grid::from_nk(2, 2), Kind::pf, {}, Format::csv, sink);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "n,k,K,heights,labels,area,pathdinv,tdinv,maxtdinv,dinv");
  lines.clear();
  emit_enumeration(Grid::from_nk(2, 1), Kind::stacks, {}, Format::json, sink);
  REQUIRE(lines.size() == 1);
  CHECK(Json::parse(lines[0])["stack"] == Json::array({1, 1}));
  lines.clear();
  emit_enumeration(Grid::from_nk(2, 2), Kind::wpf, {1, 1}, Format::csv, sink);
  CHECK(lines.size() == 1 + static_cast<std::size_t>(count_pfs(Grid::from_nk(2, 2))));
  lines.clear();
  emit_enumeration(Grid::from_nk(3, 3), Kind::path, {}, Format::json, [&](const std::string& l) {
    lines.push_back(l);
    return lines.size() < 2;
  });
  CHECK(lines.size() == 2);
  CHECK_THROWS_AS(emit_enumeration(Grid::from_nk(2, 2), Kind::pf, {1, 1}, Format::csv, sink), Error);
  CHECK(parse_kind("stacked-pf") == Kind::stacked_pf);
  CHECK_THROWS_AS(parse_kind("tree"), Error);

  const std::string csv = format_frob(frob_X(2, 2, fast()), Format::csv);
  CHECK(csv.rfind("partition,coeff\n", 0) == 0);
  const Json j = Json::parse(format_frob(frob_X(2, 2, fast()), Format::json));
  CHECK(j["side"] == "X");
  CHECK(j["K"] == 2);
}
