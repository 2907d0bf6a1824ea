// Timing comparison between the serial reference sweeps and the OpenMP
// kernels: unitarity scan, image-shift sweep, commutator sup, graph build.

#include <chrono>
#include <cstdio>
#include <string>

#include "suq/dirac.hpp"
#include "suq/growth.hpp"
#include "suq/operators.hpp"
#include "suq/parallel.hpp"
#include "suq/weyl.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace suq;
using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& body) {
  const auto t0 = Clock::now();
  body();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string word = argc > 1 ? argv[1] : "(s1 s2)(s1)";
  int ell = 0;
  const auto gens = parse_word(word);
  for (int g : gens) ell = std::max(ell, g);
  const Decomposition d = decompose(WeylElement::from_word(ell, gens));
  const Diagram g = Diagram::build(d);
  const GrowthContext ctx = make_growth_context(d);
  const Window w{4, 4, 1, 0.5};

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("word: %s   window: n_max=z_max=%d\n\n", word.c_str(), w.n_max);
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    double rs = 0, rp = 0;
    const double ts = time_ms([&] { rs = unitarity_scan(g, w, ExecMode::Serial).max_defect; });
    const double tp = time_ms([&] { rp = unitarity_scan(g, w, ExecMode::Parallel).max_defect; });
    if (rs != rp) std::printf("unitarity results differ!\n");
    row("unitarity scan", ts, tp);
  }
  {
    const auto moves = all_moves(g);
    const Window ws{5, 5, 1, 0.5};
    std::uint64_t rs = 0, rp = 0;
    const double ts =
        time_ms([&] { rs = mp_uniqueness_suite(g, moves, ws, ExecMode::Serial).witness_points; });
    const double tp = time_ms(
        [&] { rp = mp_uniqueness_suite(g, moves, ws, ExecMode::Parallel).witness_points; });
    if (rs != rp) std::printf("mp-uniqueness results differ!\n");
    row("image-shift sweep", ts, tp);
  }
  {
    const DiracPtr dd = dirac_abs_sum(g.map());
    double rs = 0, rp = 0;
    const double ts = time_ms([&] {
      for (const Move& p : ctx.moves) rs += bdd3_sup(g, p, dd, w, ExecMode::Serial).combinatorial;
    });
    const double tp = time_ms([&] {
      for (const Move& p : ctx.moves)
        rp += bdd3_sup(g, p, dd, w, ExecMode::Parallel).combinatorial;
    });
    if (rs != rp) std::printf("bdd3 results differ!\n");
    row("commutator sup", ts, tp);
  }
  {
    std::uint64_t rs = 0, rp = 0;
    const double ts = time_ms([&] { rs = GrowthGraph(ctx, w, ExecMode::Serial).edge_count(); });
    const double tp = time_ms([&] { rp = GrowthGraph(ctx, w, ExecMode::Parallel).edge_count(); });
    if (rs != rp) std::printf("graph results differ!\n");
    row("growth graph build", ts, tp);
  }
  return 0;
}
