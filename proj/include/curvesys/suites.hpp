#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvesys {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what) {
        ++checks;
        if (!cond) failures.push_back(what);
    }
};

std::vector<std::vector<int>> all_sign_vectors(int g);
std::vector<std::vector<int>> sample_sign_vectors(int g, int count, std::uint64_t seed);

// Generator oracle: size, genus, pairwise intersections, filling, triple
// table, maximal cube census, cube dimension formula and square complex.
// Runs over every sign vector unless a sample size is given.
SuiteResult run_gamma_suite(int g, std::optional<int> sample = std::nullopt, std::uint64_t seed = 1);

// Labeled polygon identities, round trip, coherent classes, isomorphism
// against the group action and orbit counts.
SuiteResult run_polygon_suite(int g);

// Stabilization along delta for every sign vector: completeness, genus,
// triangle claims, cube dimension and the coarse census of orbits.
SuiteResult run_stab_suite(int g);

// Random third moves on sub-diagrams and reduction of finger-moved diagrams.
SuiteResult run_moves_suite(int g, std::uint64_t seed, int walks = 200, int inflations = 100);

}  // namespace curvesys
