// Command-line front end. Talks to the library only through ans/ans.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ans/ans.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kInfeasible = 3, kVerifyFailed = 4 };

struct Failure {
  int code;
};

int exit_code(ans_status s) {
  switch (s) {
    case ANS_OK: return kOk;
    case ANS_E_INVALID_ARGUMENT:
    case ANS_E_OUT_OF_RANGE:
    case ANS_E_NO_SET: return kUsage;
    case ANS_E_INFEASIBLE: return kInfeasible;
    default: return kInvalid;
  }
}

void check(ans_status s) {
  if (s == ANS_OK) return;
  std::cerr << "ans: " << ans_status_name(s) << ": " << ans_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct SystemDeleter {
  void operator()(ans_system* s) const { ans_system_free(s); }
};
using System = std::unique_ptr<ans_system, SystemDeleter>;

System load(const std::string& path) {
  ans_system* s = nullptr;
  check(ans_system_load_file(path.c_str(), &s));
  return System(s);
}

std::string take(char* p) {
  std::string s = p ? p : "";
  ans_string_free(p);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abstract numeration systems on regular languages"};
  app.require_subcommand(1);

  std::string spec, number, word, from = "0", to = "9", family, out_path;
  bool csv = false, of_set = false, constants = false, fit = false;
  std::size_t nmax = 40;
  unsigned long seed = 20240601;
  long k = 1;
  std::vector<long> params;

  auto* rep = app.add_subcommand("rep", "Print rep_S(n)");
  rep->add_option("--spec", spec, "System spec file")->required();
  rep->add_option("n", number, "Nonnegative integer")->required();

  auto* val = app.add_subcommand("val", "Print val_S(w)");
  val->add_option("--spec", spec, "System spec file")->required();
  val->add_option("word", word, "Word of L (use '' for the empty word)")->required();

  auto* en = app.add_subcommand("enum", "Enumerate t_X(n) for n in [from, to]");
  en->add_option("--spec", spec, "System spec file with a set: block")->required();
  en->add_option("--from", from, "First index");
  en->add_option("--to", to, "Last index");
  en->add_flag("--csv", csv, "CSV with header n,t");

  auto* count = app.add_subcommand("count", "Exact u and v as CSV n,u,v");
  count->add_option("--spec", spec, "System spec file")->required();
  count->add_flag("--set", of_set, "Count rep_S(X) instead of L");
  count->add_option("--nmax", nmax, "Largest length");

  auto* growth = app.add_subcommand("growth", "Growth signature of L or rep_S(X)");
  growth->add_option("--spec", spec, "System spec file")->required();
  growth->add_flag("--set", of_set, "Analyze rep_S(X) instead of L");
  growth->add_flag("--constants", constants, "Also print the estimated constants");

  auto* predict = app.add_subcommand("predict", "Predicted class of t_X");
  predict->add_option("--spec", spec, "System spec file with a set: block")->required();

  auto* verify = app.add_subcommand("verify", "Run the lemma checks and expectations");
  verify->add_option("--spec", spec, "System spec file")->required();
  verify->add_option("--nmax", nmax, "Largest n for the counting identities");
  verify->add_flag("--fit", fit, "Also fit t_X against its predicted class");
  verify->add_option("--seed", seed, "Seed for sampled indices");

  auto* construct = app.add_subcommand("construct", "Emit the spec of a system family");
  construct->add_option("family", family,
                        "base, unary, bounded, fibonacci, squares, rational_power, logpoly, "
                        "inverse_logpoly")
      ->required();
  construct->add_option("params", params, "Integer parameters");
  construct->add_option("--out", out_path, "Write the spec here instead of stdout");

  auto* impossible = app.add_subcommand("impossible", "Trace for the target n/(log n)^k");
  impossible->add_option("k", k, "Positive integer")->required();

  auto* bracket = app.add_subcommand("bracket", "k with F(k) <= n < F(k+1)");
  bracket->add_option("--spec", spec, "System spec file")->required();
  bracket->add_option("n", number, "Nonnegative integer")->required();

  auto* morphism = app.add_subcommand("morphism", "Associated morphism, coding and counts");
  morphism->add_option("--spec", spec, "System spec file")->required();
  morphism->add_option("--nmax", nmax, "Largest iterate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rep) {
      System s = load(spec);
      char* w = nullptr;
      check(ans_rep(s.get(), number.c_str(), &w));
      std::cout << take(w) << "\n";
    } else if (*val) {
      System s = load(spec);
      char* n = nullptr;
      check(ans_val(s.get(), word.c_str(), &n));
      std::cout << take(n) << "\n";
    } else if (*en) {
      System s = load(spec);
      if (csv) std::cout << "n,t\n";
      auto print = [](void* user, const char* n, const char* t) -> int {
        if (*static_cast<bool*>(user)) {
          std::cout << n << ',' << t << '\n';
        } else {
          std::cout << t << '\n';
        }
        return 0;
      };
      check(ans_enumerate(s.get(), from.c_str(), to.c_str(), print, &csv));
    } else if (*count) {
      System s = load(spec);
      char* text = nullptr;
      check(ans_counts_csv(s.get(), of_set ? 1 : 0, nmax, &text));
      std::cout << take(text);
    } else if (*growth) {
      System s = load(spec);
      char* sig = nullptr;
      char* consts = nullptr;
      check(ans_signature(s.get(), of_set ? 1 : 0, &sig, &consts));
      std::cout << take(sig) << "\n";
      std::string c = take(consts);
      if (constants) std::cout << c << "\n";
    } else if (*predict) {
      System s = load(spec);
      char* cls = nullptr;
      check(ans_predict(s.get(), &cls));
      std::cout << take(cls) << "\n";
    } else if (*verify) {
      System s = load(spec);
      char* report = nullptr;
      int pass = 0;
      check(ans_verify(s.get(), nmax, fit ? 1 : 0, seed, &report, &pass));
      std::cout << take(report) << (pass ? "all PASS" : "FAIL") << "\n";
      return pass ? kOk : kVerifyFailed;
    } else if (*construct) {
      ans_system* raw = nullptr;
      check(ans_system_construct(family.c_str(), params.data(), params.size(), &raw));
      System s(raw);
      char* text = nullptr;
      check(ans_system_to_text(s.get(), &text));
      std::string body = take(text);
      if (out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << body)) {
          std::cerr << "ans: cannot write '" << out_path << "'\n";
          return kUsage;
        }
      }
    } else if (*impossible) {
      char* trace = nullptr;
      int infeasible = 0;
      check(ans_impossibility(k, &trace, &infeasible));
      std::cout << take(trace);
    } else if (*bracket) {
      System s = load(spec);
      long result = 0;
      check(ans_bracket(s.get(), number.c_str(), &result));
      std::cout << result << "\n";
    } else if (*morphism) {
      System s = load(spec);
      char* text = nullptr;
      check(ans_morphism(s.get(), nmax, &text));
      std::cout << take(text);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
