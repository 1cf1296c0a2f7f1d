#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "jamkit/problems.hpp"

namespace jamkit::gen {

/// Seeded generator for random instances and synthetic case files.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng_) < p; }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// n, m in 1..max; a in 1..n*m+2 so a slice of instances is infeasible.
problems::TriangleInstance triangle(Rng& rng, std::int64_t max_n, std::int64_t max_m);

/// Text over the pattern's alphabet, length 0..max_len.
problems::WelcomeInstance welcome(Rng& rng, std::size_t max_len);

problems::PrisonerInstance prisoners(Rng& rng, std::int64_t max_p, int max_q);

problems::OsmosInstance osmos(Rng& rng, int max_motes, std::int64_t max_size);

/// Renders instances as the problem's input file (case count first).
std::string triangle_case_file(std::span<const problems::TriangleInstance> cases);
std::string welcome_case_file(std::span<const problems::WelcomeInstance> cases);
std::string prisoner_case_file(std::span<const problems::PrisonerInstance> cases);
std::string osmos_case_file(std::span<const problems::OsmosInstance> cases);

} // namespace jamkit::gen
