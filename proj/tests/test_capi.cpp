#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "parkfrob/parkfrob.h"

namespace {

int collect(const char* line, void* user) {
  static_cast<std::vector<std::string>*>(user)->emplace_back(line);
  return 0;
}

int stop_after_one(const char* line, void* user) {
  static_cast<std::vector<std::string>*>(user)->emplace_back(line);
  return 1;
}

struct Ctx {
  pf_context* p = nullptr;
  Ctx() { REQUIRE(pf_context_create(&p) == PF_OK); }
  ~Ctx() { pf_context_destroy(p); }
};

}  // namespace

TEST_CASE("version and context") {
  CHECK(std::string(pf_version()) == "1.0.0");
  Ctx c;
  CHECK(std::string(pf_context_last_error(c.p)).empty());
  CHECK(pf_context_set(c.p, "format", "csv") == PF_OK);
  CHECK(pf_context_set(c.p, "format", "xml") == PF_ERR_INPUT);
  CHECK(std::string(pf_context_last_error(c.p)).find("xml") != std::string::npos);
  CHECK(pf_context_set(c.p, nullptr, "1") == PF_ERR_INPUT);
  CHECK(pf_context_load_config(c.p, "/nonexistent.conf") == PF_ERR_INPUT);
  CHECK(pf_context_create(nullptr) == PF_ERR_INPUT);
  pf_context_destroy(nullptr);
  pf_result_destroy(nullptr);
}

TEST_CASE("enumerate") {
  Ctx c;
  REQUIRE(pf_context_set(c.p, "format", "csv") == PF_OK);
  std::vector<std::string> lines;
  CHECK(pf_enumerate(c.p, 2, 2, -1, "pf", nullptr, 0, collect, &lines) == PF_OK);
  CHECK(lines.size() == 4);
  lines.clear();
  CHECK(pf_enumerate(c.p, 2, 2, -1, "pf", nullptr, 0, stop_after_one, &lines) == PF_OK);
  CHECK(lines.size() == 1);
  lines.clear();
  const int eta[] = {1, 1};
  CHECK(pf_enumerate(c.p, 2, 2, -1, "wpf-weak", eta, 2, collect, &lines) == PF_OK);
  CHECK(lines.size() == 4);
  CHECK(pf_enumerate(c.p, 2, 3, -1, "pf", nullptr, 0, collect, &lines) == PF_ERR_INPUT);
  CHECK(pf_enumerate(c.p, 2, 2, -1, "tree", nullptr, 0, collect, &lines) == PF_ERR_INPUT);
  CHECK(pf_enumerate(c.p, 2, 2, -1, "pf", nullptr, 0, nullptr, nullptr) == PF_ERR_INPUT);
  REQUIRE(pf_context_set(c.p, "k_cap", "4") == PF_OK);
  CHECK(pf_enumerate(c.p, 3, 2, -1, "pf", nullptr, 0, collect, &lines) == PF_OK);
  CHECK(pf_enumerate(c.p, 4, 2, -1, "pf", nullptr, 0, collect, &lines) == PF_ERR_INPUT);
  REQUIRE(pf_context_set(c.p, "k_cap", "12") == PF_OK);
}

TEST_CASE("frob") {
  Ctx c;
  pf_result* r = nullptr;
  REQUIRE(pf_frob(c.p, 2, 2, "X", &r) == PF_OK);
  const auto j = nlohmann::json::parse(pf_result_text(r));
  CHECK(j["side"] == "X");
  CHECK(j["text"] == "(1 + q*t)*s(2) + (q)*s(1,1)");
  pf_result_destroy(r);
  r = nullptr;
  CHECK(pf_frob(c.p, 2, 2, "Z", &r) == PF_ERR_INPUT);
  CHECK(r == nullptr);
  REQUIRE(pf_context_set(c.p, "check", "1") == PF_OK);
  REQUIRE(pf_frob(c.p, 3, 2, "Y", &r) == PF_OK);
  pf_result_destroy(r);
}

TEST_CASE("verify") {
  Ctx c;
  pf_result* r = nullptr;
  REQUIRE(pf_verify(c.p, "all", 2, 0, &r) == PF_OK);
  std::istringstream in(pf_result_text(r));
  int count = 0;
  for (std::string line; std::getline(in, line); ++count) {
    CHECK(nlohmann::json::parse(line)["equal"] == true);
  }
  CHECK(count > 0);
  pf_result_destroy(r);
  CHECK(pf_verify(c.p, "nope", 2, 0, &r) == PF_ERR_INPUT);
}

TEST_CASE("cache clear without a directory") {
  Ctx c;
  int removed = -1;
  CHECK(pf_cache_clear(c.p, &removed) == PF_ERR_INPUT);
}
