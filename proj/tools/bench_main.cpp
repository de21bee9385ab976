// Benchmark comparing the serial reference kernels with the OpenMP versions:
// all-pairs Borel adjacency, fan cell enumeration, ray extraction and the
// per-cone lower-bound analysis.

#include <chrono>
#include <cstdio>
#include <string>

#include "hgf/analysis.hpp"

using namespace hgf;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_instance(const std::string& hilbert, int n, int jobs)
{
    std::printf("== Hilb(%s, P^%d) ==\n", hilbert.c_str(), n);
    auto hp = gotzmann_decomposition(parse_polynomial(hilbert));

    auto t0 = clock_type::now();
    auto ideals = enumerate_ideals(hp, n);
    std::printf("  enumerate            %8.3fs   (%zu ideals)\n", seconds_since(t0),
                ideals.size());

    t0 = clock_type::now();
    auto gs = borel_graph_serial(ideals);
    double serial_graph = seconds_since(t0);
    t0 = clock_type::now();
    auto gp = borel_graph(ideals, jobs);
    double parallel_graph = seconds_since(t0);
    std::printf("  borel graph  serial  %8.3fs   parallel %8.3fs   (%zu edges, x%.2f)\n",
                serial_graph, parallel_graph, gs.edges.size(),
                parallel_graph > 0 ? serial_graph / parallel_graph : 0.0);

    t0 = clock_type::now();
    GFan fs = groebner_fan_serial(gs);
    double serial_fan = seconds_since(t0);
    t0 = clock_type::now();
    GFan fp = groebner_fan(gp, jobs);
    double parallel_fan = seconds_since(t0);
    std::printf("  groebner fan serial  %8.3fs   parallel %8.3fs   (%zu cones, x%.2f)\n",
                serial_fan, parallel_fan, fs.cones.size(),
                parallel_fan > 0 ? serial_fan / parallel_fan : 0.0);

    t0 = clock_type::now();
    auto rays = fan_rays(fp, jobs);
    std::printf("  fan rays             %8.3fs   (%zu rays)\n", seconds_since(t0), rays.size());

    std::vector<TermOrderMatrix> tiebreaks{TermOrderMatrix::deglex(n + 1),
                                           TermOrderMatrix::revlex(n + 1)};
    t0 = clock_type::now();
    auto r1 = component_lower_bound(ideals, gp, fp, tiebreaks, 1);
    double serial_lb = seconds_since(t0);
    t0 = clock_type::now();
    auto rj = component_lower_bound(ideals, gp, fp, tiebreaks, jobs);
    double parallel_lb = seconds_since(t0);
    std::printf("  lower bound  serial  %8.3fs   parallel %8.3fs   (m = %d, x%.2f)\n",
                serial_lb, parallel_lb, rj.m_certified,
                parallel_lb > 0 ? serial_lb / parallel_lb : 0.0);
    (void)r1;
}

} // namespace

int main(int argc, char** argv)
{
    // usage: hgf-bench [--jobs N] [<hilbert> <pn>]...
    int jobs = 0;
    std::vector<std::pair<std::string, int>> instances;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc) {
            jobs = std::atoi(argv[++i]);
        } else if (i + 1 < argc) {
            instances.emplace_back(arg, std::atoi(argv[i + 1]));
            ++i;
        }
    }
    if (instances.empty())
        instances = {{"5t-2", 3}, {"8", 3}, {"6t-3", 3}};
    for (auto& [p, n] : instances) bench_instance(p, n, jobs);
    return 0;
}
