// Acceptance harness: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "orbitweyl/report.hpp"

using namespace orbitweyl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Eigenvalue closed forms written out here, independent of the library tables.
Rational alpha(int m, int k) {
  Rational kk(k);
  return kk * kk * (kk + make_rational(m - 1, 2)) * (kk + make_rational(m, 2));
}
Rational beta(int m, int k) {
  Rational kk(k);
  return kk * (kk + 1) * (kk + make_rational(m, 2) - 1) * (kk + make_rational(m, 2) - make_rational(1, 2));
}
// q as coefficients (c0, c1, c2): sl (E + m/2)^2, so (E + m/2 + 1)(E + m/2 - 1).
CorrectionPoly q_oracle(Family f, int m) {
  Rational h = make_rational(m, 2);
  CorrectionPoly q;
  if (f == Family::sl) q.c = {h * h, 2 * h, Rational(1)};
  else q.c = {(h + 1) * (h - 1), 2 * h, Rational(1)};
  return q;
}

struct Built {
  std::unique_ptr<Chart> chart;
  std::unique_ptr<ExoticBuilder> builder;
  QSolveResult qs;
  DiffOp d0;
};

Built& built(Family f, int N) {
  static std::map<std::pair<Family, int>, std::unique_ptr<Built>> cache;
  auto& b = cache[{f, N}];
  if (!b) {
    b = std::make_unique<Built>();
    b->chart = std::make_unique<Chart>(build_algebra(f, N));
    b->builder = std::make_unique<ExoticBuilder>(*b->chart);
    b->qs = b->builder->solve_q(6);
    // D0 from the solved q, so a wrong q shows up as failed eigenvalues.
    if (b->qs.ok) b->d0 = b->builder->build_D0(b->qs.q);
  }
  return *b;
}

std::string label(Family f, int N) { return family_name(f) + "(" + std::to_string(N) + ")"; }

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& s) {
    ok = false;
    note << " " << s << ";";
  }
};

Outcome eigen_law(Family f, const std::vector<int>& ranks, int kmax) {
  Outcome o;
  for (int N : ranks) {
    auto t = Clock::now();
    Built& b = built(f, N);
    if (!b.qs.ok) {
      o.fail(label(f, N) + " q solve failed");
      continue;
    }
    EigenResult e = eigenvalue_sequence(*b.chart, b.d0, kmax);
    int m = b.chart->spec().m();
    if (e.failing_k >= 0) o.fail(label(f, N) + " not divisible at k=" + std::to_string(e.failing_k));
    for (std::size_t k = 0; k < e.values.size(); ++k) {
      Rational want = f == Family::sl ? alpha(m, static_cast<int>(k)) : beta(m, static_cast<int>(k));
      if (e.values[k] != want)
        o.fail(label(f, N) + " k=" + std::to_string(k) + " got " + to_string(e.values[k]) + " want " + to_string(want));
    }
    o.note << " " << label(f, N) << " gamma(1)=" << (e.values.size() > 1 ? to_string(e.values[1]) : "?");
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.1fs", seconds_since(t));
    o.note << buf << ";";
  }
  return o;
}

// Runs the listed suites once per algebra and keeps the reports.
const VerificationReport& report(Family f, int N) {
  static std::map<std::pair<Family, int>, std::unique_ptr<VerificationReport>> cache;
  auto& r = cache[{f, N}];
  if (!r) {
    SuiteConfig c;
    c.family = f;
    c.N = N;
    c.k_max = f == Family::sl ? 8 : 6;
    bool full = (f == Family::sl && N == 3) || (f == Family::so && N == 6);
    c.suites = full ? all_suites()
                    : std::vector<std::string>{"model", "chart", "heisenberg", "build", "lowest-weight", "symbol"};
    r = std::make_unique<VerificationReport>(run(c));
  }
  return *r;
}

const SuiteReport* suite(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.suites)
    if (s.name == name) return &s;
  return nullptr;
}

void require_suite(Outcome& o, Family f, int N, const std::string& name) {
  const SuiteReport* s = suite(report(f, N), name);
  if (!s) return o.fail(label(f, N) + " " + name + " missing");
  if (s->status != Status::pass) {
    std::string first;
    for (const auto& c : s->checks)
      if (c.status != Status::pass) {
        first = c.id;
        break;
      }
    o.fail(label(f, N) + " " + name + " " + status_name(s->status) + " at " + first);
  }
}

bool check_passed(const VerificationReport& r, const std::string& id) {
  for (const auto& s : r.suites)
    for (const auto& c : s.checks)
      if (c.id == id) return c.status == Status::pass;
  return false;
}

const std::vector<std::pair<Family, int>> kDesk{{Family::sl, 3}, {Family::sl, 4}, {Family::sl, 5},
                                                 {Family::so, 6}, {Family::so, 7}, {Family::so, 8}};

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"eigenvalue law sl(3,4,5), k = 0..8", [] { return eigen_law(Family::sl, {3, 4, 5}, 8); }},
      {"eigenvalue law so(6,7,8), k = 0..6",
       [] {
         Outcome o = eigen_law(Family::so, {6, 7, 8}, 6);
         const Rational spot[] = {3, 6, 10};
         for (int i = 0; i < 3; ++i) {
           EigenResult e = eigenvalue_sequence(*built(Family::so, 6 + i).chart, built(Family::so, 6 + i).d0, 1);
           if (e.values.size() < 2 || e.values[1] != spot[i]) o.fail("spot value so(" + std::to_string(6 + i) + ")");
         }
         return o;
       }},
      {"correction polynomial recovered at k = 2..6 and unique",
       [] {
         Outcome o;
         for (auto [f, N] : kDesk) {
           Built& b = built(f, N);
           if (!b.qs.ok) {
             o.fail(label(f, N) + " " + b.qs.error);
             continue;
           }
           if (b.qs.q != q_oracle(f, b.chart->spec().m())) o.fail(label(f, N) + " q = " + b.qs.q.to_string());
           if (b.builder->divisibility_defect(b.qs.q, 2, 1).is_zero()) o.fail(label(f, N) + " q+1 admissible");
           o.note << " " << label(f, N) << ": " << b.qs.q.to_string() << ";";
         }
         return o;
       }},
      {"principal symbol identity",
       [] {
         Outcome o;
         for (auto [f, N] : kDesk) require_suite(o, f, N, "symbol");
         return o;
       }},
      {"lowest-weight conditions for D0 and S",
       [] {
         Outcome o;
         for (auto [f, N] : kDesk) require_suite(o, f, N, "lowest-weight");
         return o;
       }},
      {"family spans dim g, path independent; sl(3) 28 and so(6) 105 commutators vanish",
       [] {
         Outcome o;
         for (auto [f, N] : {std::pair{Family::sl, 3}, std::pair{Family::so, 6}}) {
           require_suite(o, f, N, "family");
           require_suite(o, f, N, "commutativity");
           const SuiteReport* s = suite(report(f, N), "commutativity");
           std::string want = f == Family::sl ? "(28 cases)" : "(105 cases)";
           if (s && s->checks.front().description.find(want) == std::string::npos) o.fail(label(f, N) + " pair count");
           if (s) {
             char buf[48];
             std::snprintf(buf, sizeof buf, " %s commutators %.1fs;", label(f, N).c_str(), s->wall_ms / 1000);
             o.note << buf;
           }
         }
         return o;
       }},
      {"model: Jacobi, invariance, Heisenberg, P closed forms, tangent dim",
       [] {
         Outcome o;
         for (auto [f, N] : kDesk) {
           require_suite(o, f, N, "model");
           require_suite(o, f, N, "heisenberg");
         }
         return o;
       }},
      {"chart: homomorphism, equivariance, f_psi closed form",
       [] {
         Outcome o;
         for (auto [f, N] : kDesk) require_suite(o, f, N, "chart");
         return o;
       }},
      {"inner product: (1|1), f_psi norms, Gram p = 1, 2, adjointness",
       [] {
         Outcome o;
         for (auto [f, N] : {std::pair{Family::sl, 3}, std::pair{Family::so, 6}}) require_suite(o, f, N, "gram");
         const auto& sl3 = report(Family::sl, 3);
         if (sl3.grams.size() < 2 || sl3.grams[0].ldl.rank != 8 || sl3.grams[1].ldl.rank != 27)
           o.fail("sl(3) Gram ranks are not 8 and 27");
         const auto& so6 = report(Family::so, 6);
         for (const auto& g : so6.grams) {
           if (g.ldl.rank != g.oracle_rank) o.fail("so(6) rank mismatch");
           o.note << " so(6) p=" << g.degree << " rank " << g.ldl.rank << "/" << g.monomials.size() << ";";
         }
         if (!check_passed(sl3, "gram.adjointness") || !check_passed(so6, "gram.adjointness")) o.fail("adjointness");
         return o;
       }},
      {"so(6) and sl(4) eigenvalues agree for k = 0..6",
       [] {
         Outcome o;
         auto a = eigenvalue_sequence(*built(Family::sl, 4).chart, built(Family::sl, 4).d0, 6);
         auto b = eigenvalue_sequence(*built(Family::so, 6).chart, built(Family::so, 6).d0, 6);
         if (a.failing_k >= 0 || b.failing_k >= 0 || a.values != b.values || a.values.size() != 7) o.fail("sequences differ");
         for (const auto& v : a.values) o.note << " " << to_string(v);
         return o;
       }},
  };

  // Suite reports are shared by several criteria; build them first so the
  // per-criterion times below are not dominated by whichever runs first.
  auto t0 = Clock::now();
  for (auto [f, N] : kDesk) report(f, N);
  std::printf("# suite reports for 6 algebras built in %.1fs\n", seconds_since(t0));

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2zu %s  [%.1fs]", i + 1, o.ok ? "PASS" : "FAIL", seconds_since(t));
    std::cout << head << "  " << criteria[i].first << " |" << o.note.str() << std::endl;
  }
  return all ? 0 : 1;
}
