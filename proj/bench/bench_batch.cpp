// Throughput comparison of the serial and OpenMP batch drivers over a
// synthetic graph stream.  The per-graph kernels are pure, so the parallel
// run must produce byte-identical results; this also re-checks that.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "p7c5/batch.hpp"
#include "p7c5/coloring.hpp"
#include "p7c5/families.hpp"
#include "p7c5/hole_structure.hpp"
#include "p7c5/patterns.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace p7c5;

namespace {

std::string analyze(const Graph& g) {
    std::ostringstream out;
    for (GraphClass c : {GraphClass::kp, GraphClass::diamond, GraphClass::paw, GraphClass::bull})
        out << class_membership(g, c).member;
    if (auto hole = find_seven_hole(g)) {
        auto att = compute_attachments(g, *hole);
        out << ':' << att.spill.count() << ':' << check_m_properties(g, att).size();
    }
    out << ":w" << max_clique(g).omega;
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 400;
    std::mt19937_64 rng(7);
    std::vector<Graph> stream;
    for (int i = 0; i < count; ++i) {
        switch (i % 4) {
        case 0: {
            BlowupSpec spec{{1, 1, 1, 1, 1, 1, 1}, false};
            spec.sizes[i % 7] = 1 + (int)(rng() % 3);
            spec.sizes[(i + 3) % 7] = 1 + (int)(rng() % 2);
            stream.push_back(generate_blowup(spec));
            break;
        }
        case 1: stream.push_back(generate_family({FamilyId::f9, 1 + (int)(rng() % 3), 1 + (int)(rng() % 3)})); break;
        case 2: {
            int n = 10 + (int)(rng() % 5);
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 100 < 22) edges.push_back({u, v});
            stream.push_back(Graph::build(n, edges));
            break;
        }
        default: stream.push_back(generate_counterexample("g3", 1 + (int)(rng() % 3))); break;
        }
    }

    auto run = [&](int jobs) {
        auto start = std::chrono::steady_clock::now();
        auto results = batch_map<std::string>((int)stream.size(), jobs,
                                              [&](int i) { return analyze(stream[i]); });
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::make_pair(results, secs);
    };

    auto [serial, serial_s] = run(1);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    auto [parallel, parallel_s] = run(threads);

    if (serial != parallel) {
        std::cerr << "parallel batch diverged from the serial reference\n";
        return 1;
    }
    std::cout << "graphs: " << stream.size() << "\n"
              << "serial:   " << serial_s << " s (" << stream.size() / serial_s << " graphs/s)\n"
              << "parallel: " << parallel_s << " s with " << threads << " threads ("
              << stream.size() / parallel_s << " graphs/s)\n"
              << "speedup:  " << serial_s / parallel_s << "x\n";
    return 0;
}
