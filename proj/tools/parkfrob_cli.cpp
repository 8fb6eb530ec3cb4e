// parkfrob command line. Talks to the library only through parkfrob.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parkfrob/parkfrob.h"

namespace {

struct ContextDeleter {
  void operator()(pf_context* c) const { pf_context_destroy(c); }
};
struct ResultDeleter {
  void operator()(pf_result* r) const { pf_result_destroy(r); }
};
using Context = std::unique_ptr<pf_context, ContextDeleter>;
using Result = std::unique_ptr<pf_result, ResultDeleter>;

int fail(const pf_context* ctx, pf_status st) {
  std::cerr << "parkfrob: " << pf_context_last_error(ctx) << "\n";
  return static_cast<int>(st);
}

int write_line(const char* line, void* user) {
  auto* os = static_cast<std::ostream*>(user);
  *os << line << '\n';
  return os->good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational parking functions and Frobenius characters"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format;
  std::string out_path;
  std::string cache_dir;
  int workers = 0;
  bool check = false;
  app.add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--cache", cache_dir, "result cache directory (default $PARKFROB_CACHE)");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--check", check, "also compute the second route and compare");

  int n = 0;
  int k = 0;
  int N = -1;

  auto* en = app.add_subcommand("enumerate", "dump objects with their statistics");
  std::string kind = "pf";
  std::vector<int> eta;
  en->add_option("--n", n)->required();
  en->add_option("--k", k)->required();
  en->add_option("--N", N, "affine parameter (default k)");
  en->add_option("--kind", kind, "path, pf, wpf, wpf-weak, stacks, stacked-pf or gamma");
  en->add_option("--eta", eta, "label content for wpf kinds, e.g. 2,1,1")->delimiter(',');

  auto* fr = app.add_subcommand("frob", "Frobenius character in the Schur basis");
  std::string side = "X";
  fr->add_option("--n", n)->required();
  fr->add_option("--k", k)->required();
  fr->add_option("--side", side, "X, Y, E or Delta");

  auto* ve = app.add_subcommand("verify", "check identities over a range of grids");
  std::string suite = "all";
  int n_max = 0;
  int K_max = 0;
  ve->add_option("--suite", suite, "shuffle, skewing, cells, census or all");
  ve->add_option("--n-max", n_max);
  ve->add_option("--K-max", K_max);

  auto* ca = app.add_subcommand("cache", "manage the result cache");
  auto* clear = ca->add_subcommand("clear", "remove cached results");
  ca->require_subcommand(1);

  // Global options may follow the subcommand.
  for (auto* sub : {en, fr, ve, ca, clear}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pf_context* raw = nullptr;
  if (pf_context_create(&raw) != PF_OK) return 1;
  Context ctx(raw);

  auto set = [&](const char* key, const std::string& value) {
    return pf_context_set(ctx.get(), key, value.c_str());
  };
  pf_status st = PF_OK;
  if (const char* env = std::getenv("PARKFROB_CACHE"); env && *env) st = set("cache", env);
  if (st == PF_OK && !config_path.empty()) st = pf_context_load_config(ctx.get(), config_path.c_str());
  if (st == PF_OK && !format.empty()) st = set("format", format);
  if (st == PF_OK && !cache_dir.empty()) st = set("cache", cache_dir);
  if (st == PF_OK && workers > 0) st = set("workers", std::to_string(workers));
  if (st == PF_OK && check) st = set("check", "1");
  if (st != PF_OK) return fail(ctx.get(), st);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "parkfrob: cannot write " << out_path << "\n";
      return 2;
    }
    os = &file;
  }

  if (*en) {
    st = pf_enumerate(ctx.get(), n, k, N, kind.c_str(), eta.data(), static_cast<int>(eta.size()),
                      write_line, os);
    if (st != PF_OK) return fail(ctx.get(), st);
  } else if (*fr || *ve) {
    pf_result* r = nullptr;
    st = *fr ? pf_frob(ctx.get(), n, k, side.c_str(), &r)
             : pf_verify(ctx.get(), suite.c_str(), n_max, K_max, &r);
    Result res(r);
    if (res) *os << pf_result_text(res.get());
    if (st == PF_VERDICT_FALSE) {
      std::cerr << "parkfrob: at least one verdict is false\n";
      return static_cast<int>(st);
    }
    if (st != PF_OK) return fail(ctx.get(), st);
  } else if (*clear) {
    int removed = 0;
    st = pf_cache_clear(ctx.get(), &removed);
    if (st != PF_OK) return fail(ctx.get(), st);
    *os << "removed " << removed << "\n";
  }
  os->flush();
  return os->good() ? 0 : 1;
}
