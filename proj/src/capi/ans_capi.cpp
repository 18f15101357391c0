#include "ans/ans.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <sstream>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/fit.hpp"
#include "core/growth.hpp"
#include "core/morphic.hpp"
#include "core/system_file.hpp"

struct ans_system {
  ans::SystemSpec spec;
  ans::NumerationSystem system;
  std::optional<ans::RecognizableSet> set;
};

namespace {

thread_local std::string last_error;

ans_status status_of(ans::ErrorKind k) {
  using K = ans::ErrorKind;
  switch (k) {
    case K::InvalidArgument: return ANS_E_INVALID_ARGUMENT;
    case K::Parse: return ANS_E_PARSE;
    case K::InvalidSpec: return ANS_E_INVALID_SPEC;
    case K::NotSubset: return ANS_E_NOT_SUBSET;
    case K::RejectedWord: return ANS_E_REJECTED_WORD;
    case K::EmptyLanguage: return ANS_E_EMPTY_LANGUAGE;
    case K::FiniteLanguage: return ANS_E_FINITE_LANGUAGE;
    case K::OutOfRange: return ANS_E_OUT_OF_RANGE;
    case K::NoRecurrence: return ANS_E_NO_RECURRENCE;
    case K::Infeasible: return ANS_E_INFEASIBLE;
    case K::FiniteFixedPoint: return ANS_E_FINITE_FIXED_POINT;
  }
  return ANS_E_INTERNAL;
}

struct NoSet : std::runtime_error {
  NoSet() : std::runtime_error("the system has no set: block") {}
};

template <typename F>
ans_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return ANS_OK;
  } catch (const ans::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const NoSet& e) {
    last_error = e.what();
    return ANS_E_NO_SET;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ANS_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ANS_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw ans::Error(ans::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

ans_system* make_system(ans::SystemSpec spec) {
  ans::NumerationSystem s = ans::build_system(spec);
  std::optional<ans::RecognizableSet> x;
  if (spec.set) x.emplace(s, spec.set->dfa);
  return new ans_system{std::move(spec), std::move(s), std::move(x)};
}

const ans::RecognizableSet& need_set(const ans_system* s) {
  if (!s->set) throw NoSet();
  return *s->set;
}

ans::RecognizableSet set_or_naturals(const ans_system* s) {
  return s->set ? *s->set : ans::RecognizableSet::natural(s->system);
}

std::string line(const std::string& name, bool pass, const std::string& detail) {
  return "check " + name + (detail.empty() ? "" : " " + detail) + (pass ? " PASS" : " FAIL") + "\n";
}

}  // namespace

extern "C" {

const char* ans_last_error(void) { return last_error.c_str(); }

const char* ans_status_name(ans_status status) {
  switch (status) {
    case ANS_OK: return "ok";
    case ANS_E_INVALID_ARGUMENT: return "invalid argument";
    case ANS_E_PARSE: return "parse error";
    case ANS_E_INVALID_SPEC: return "invalid spec";
    case ANS_E_NOT_SUBSET: return "set not contained in the language";
    case ANS_E_REJECTED_WORD: return "word rejected";
    case ANS_E_EMPTY_LANGUAGE: return "empty language";
    case ANS_E_FINITE_LANGUAGE: return "finite language";
    case ANS_E_OUT_OF_RANGE: return "out of range";
    case ANS_E_NO_RECURRENCE: return "no recurrence";
    case ANS_E_INFEASIBLE: return "infeasible";
    case ANS_E_FINITE_FIXED_POINT: return "finite fixed point";
    case ANS_E_NO_SET: return "no set";
    case ANS_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

void ans_string_free(char* s) { std::free(s); }

ans_status ans_system_load_file(const char* path, ans_system** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = make_system(ans::load_system_file(path));
  });
}

ans_status ans_system_load_text(const char* text, ans_system** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make_system(ans::parse_system(text));
  });
}

ans_status ans_system_construct(const char* family, const long* params, size_t nparams,
                                ans_system** out) {
  return guard([&] {
    require(family, "family");
    require(out, "out");
    if (nparams) require(params, "params");
    std::vector<long> p(params, params + nparams);
    *out = make_system(ans::construct_family(family, p));
  });
}

void ans_system_free(ans_system* system) { delete system; }

ans_status ans_system_to_text(const ans_system* s, char** out) {
  return guard([&] {
    require(s, "system");
    require(out, "out");
    *out = dup(ans::emit_system(s->spec));
  });
}

int ans_system_has_set(const ans_system* s) { return s && s->set ? 1 : 0; }

ans_status ans_rep(const ans_system* s, const char* n, char** word) {
  return guard([&] {
    require(s, "system");
    require(n, "n");
    require(word, "word");
    *word = dup(s->system.rep(ans::parse_nonnegative(n)));
  });
}

ans_status ans_val(const ans_system* s, const char* w, char** n) {
  return guard([&] {
    require(s, "system");
    require(w, "word");
    require(n, "n");
    *n = dup(ans::to_string(s->system.val(w)));
  });
}

ans_status ans_term(const ans_system* s, const char* n, char** t) {
  return guard([&] {
    require(s, "system");
    require(n, "n");
    require(t, "t");
    *t = dup(ans::to_string(need_set(s).t(ans::parse_nonnegative(n))));
  });
}

ans_status ans_contains(const ans_system* s, const char* m, int* member) {
  return guard([&] {
    require(s, "system");
    require(m, "m");
    require(member, "member");
    *member = need_set(s).contains(ans::parse_nonnegative(m)) ? 1 : 0;
  });
}

ans_status ans_enumerate(const ans_system* s, const char* from, const char* to,
                         ans_term_callback callback, void* user) {
  return guard([&] {
    require(s, "system");
    require(from, "from");
    require(to, "to");
    require(reinterpret_cast<const void*>(callback), "callback");
    const auto& x = need_set(s);
    ans::BigInt a = ans::parse_nonnegative(from), b = ans::parse_nonnegative(to);
    for (ans::BigInt n = a; n <= b; ++n) {
      std::string t = ans::to_string(x.t(n));
      if (callback(user, ans::to_string(n).c_str(), t.c_str()) != 0) break;
    }
  });
}

ans_status ans_counts_csv(const ans_system* s, int which, size_t n_max, char** csv) {
  return guard([&] {
    require(s, "system");
    require(csv, "csv");
    const ans::CountTable& t = which ? need_set(s).rep_counts() : s->system.counts();
    *csv = dup(ans::counts_csv(t, n_max));
  });
}

ans_status ans_signature(const ans_system* s, int which, char** out_line, char** constants) {
  return guard([&] {
    require(s, "system");
    require(out_line, "line");
    const ans::Dfa& d = which ? need_set(s).rep_dfa() : s->system.dfa();
    ans::GrowthSignature sig = ans::signature(d);
    *out_line = dup(sig.render());
    if (constants) *constants = dup(sig.render_constants());
  });
}

ans_status ans_predict(const ans_system* s, char** out_line) {
  return guard([&] {
    require(s, "system");
    require(out_line, "line");
    *out_line = dup(ans::predict_set(need_set(s)).render());
  });
}

ans_status ans_verify(const ans_system* s, size_t n_max, int fit, unsigned long seed,
                      char** report, int* all_pass) {
  return guard([&] {
    require(s, "system");
    require(report, "report");
    require(all_pass, "all_pass");
    const ans::RecognizableSet x = set_or_naturals(s);
    std::string out;
    bool ok = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
      out += line(name, pass, detail);
      ok = ok && pass;
    };

    ans::LemmaReport lemma = ans::verify_lemma_L(x, n_max);
    record("lemma_L", lemma.ok, lemma.detail);

    if (x.is_infinite()) {
      std::mt19937_64 rng(seed);
      std::vector<ans::BigInt> samples;
      for (unsigned long n = 0; n < 32; ++n) samples.emplace_back(n);
      const ans::BigInt span = x.rep_counts().v(12);
      gmp_randclass gen(gmp_randinit_default);
      gen.seed(static_cast<unsigned long>(rng()));
      for (int i = 0; i < 32; ++i) samples.push_back(gen.get_z_range(span));
      ans::LemmaReport eq = ans::verify_lemma_equiv(x, samples);
      record("lemma_equiv", eq.ok, eq.detail);

      ans::MorphicPipeline p = ans::build_pipeline(x);
      ans::MorphicWord word(p.mu.morphism, p.mu.alpha, p.g);
      const std::size_t m = 2000;
      auto coded = word.coded_prefix(m);
      auto chi = x.characteristic(m - 1);
      long bad = -1;
      for (std::size_t i = 0; i < m && bad < 0; ++i) {
        if (coded[i] != chi[i]) bad = static_cast<long>(i);
      }
      record("characteristic", bad < 0,
             bad < 0 ? "m<" + std::to_string(m) : "first mismatch m=" + std::to_string(bad));
    }

    const ans::Expectations& e = s->spec.expect;
    if (!e.enumeration.empty()) {
      long bad = -1;
      std::string got;
      for (std::size_t i = 0; i < e.enumeration.size() && bad < 0; ++i) {
        got = ans::to_string(x.t(ans::BigInt(static_cast<unsigned long>(i))));
        if (got != e.enumeration[i]) bad = static_cast<long>(i);
      }
      record("expect_enum", bad < 0,
             bad < 0 ? "n<" + std::to_string(e.enumeration.size())
                     : "first mismatch n=" + std::to_string(bad) + " expected=" +
                           e.enumeration[static_cast<std::size_t>(bad)] + " got=" + got);
    }
    if (!e.sig.empty()) {
      std::string got = ans::signature(s->system.dfa()).render();
      record("expect_sig", got == e.sig, "got '" + got + "'");
    }
    if (!e.set_sig.empty()) {
      std::string got = ans::signature(x.rep_dfa()).render();
      record("expect_setsig", got == e.set_sig, "got '" + got + "'");
    }
    std::optional<ans::GrowthClass> cls;
    if (!e.cls.empty() || fit) {
      try {
        cls = ans::predict_set(x);
      } catch (const ans::Error& err) {
        record("predict", false, err.what());
      }
    }
    if (cls && !e.cls.empty()) {
      std::string got = cls->render();
      record("expect_class", got == e.cls, "got '" + got + "'");
    }
    if (cls && fit) {
      if (cls->kind == ans::GrowthClass::Kind::StretchedExp) {
        std::vector<unsigned long> at{100000};
        ans::FitReport r = ans::empirical_fit(x, *cls, at, 0);
        const double q = r.ratio.front();
        std::ostringstream d;
        d << "n=100000 ratio=" << q << " band=[0.85,1.15]";
        record("fit", q >= 0.85 && q <= 1.15, d.str());
      } else {
        ans::FitReport r = ans::empirical_fit(x, *cls, ans::geometric_grid(1024, 65536, 25), 8.0);
        std::ostringstream d;
        d << "points=" << r.n.size() << " spread=" << r.spread << " tol=8";
        record("fit", r.pass, d.str());
      }
    }
    *report = dup(out);
    *all_pass = ok ? 1 : 0;
  });
}

ans_status ans_bracket(const ans_system* s, const char* n, long* k) {
  return guard([&] {
    require(s, "system");
    require(n, "n");
    require(k, "k");
    *k = ans::bracket_index(set_or_naturals(s), ans::parse_nonnegative(n));
  });
}

ans_status ans_impossibility(long k, char** trace, int* infeasible) {
  return guard([&] {
    require(trace, "trace");
    require(infeasible, "infeasible");
    ans::FeasibilityReport r = ans::impossibility_check(k);
    std::string t;
    for (const auto& l : r.trace) t += l + "\n";
    *trace = dup(t);
    *infeasible = r.feasible ? 0 : 1;
  });
}

ans_status ans_morphism(const ans_system* s, size_t n_max, char** text) {
  return guard([&] {
    require(s, "system");
    require(text, "text");
    ans::MorphicPipeline p = ans::build_pipeline(set_or_naturals(s));
    std::string out = p.mu.morphism.to_text();
    out += "coding:";
    for (std::size_t i = 0; i < p.g.image.size(); ++i) {
      const int c = p.g.image[i];
      out += " " + p.mu.morphism.name(static_cast<int>(i)) + "=" + (c < 0 ? "eps" : std::to_string(c));
    }
    out += "\n";
    auto c = p.counts(n_max);
    out += "n,length,coded_length,F\n";
    for (std::size_t n = 0; n <= n_max; ++n) {
      out += std::to_string(n) + "," + ans::to_string(c.length[n]) + "," +
             ans::to_string(c.coded_length[n]) + "," + ans::to_string(c.F[n]) + "\n";
    }
    *text = dup(out);
  });
}

}  // extern "C"
