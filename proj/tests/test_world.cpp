#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mobispread/world.hpp"

using namespace mobispread;

namespace {

SimParams small_params(std::uint32_t side, std::uint32_t n, double p, double q, double f0 = 0.2) {
    SimParams sp;
    sp.lattice_side = side;
    sp.agent_count = n;
    sp.infect_prob = p;
    sp.heal_prob = q;
    sp.initial_infected_fraction = f0;
    sp.max_steps = 100;
    return sp;
}

// Every agent sits in exactly the bucket of its position, buckets ascending.
bool site_index_consistent(const World& w) {
    std::vector<int> seen(w.agent_count(), 0);
    for (std::uint32_t y = 0; y < w.side(); ++y) {
        for (std::uint32_t x = 0; x < w.side(); ++x) {
            const auto bucket = w.agents_at(x, y);
            for (std::size_t i = 0; i < bucket.size(); ++i) {
                const AgentId a = bucket[i];
                if (w.positions()[a] != Position{x, y}) return false;
                if (i > 0 && bucket[i - 1] >= a) return false;
                ++seen[a];
            }
        }
    }
    for (int s : seen)
        if (s != 1) return false;
    return true;
}

std::size_t count_flags(const World& w) {
    std::size_t c = 0;
    for (AgentId a = 0; a < w.agent_count(); ++a) c += w.is_infected(a);
    return c;
}

// Probability that at least one of k independent Bernoulli(p) trials succeeds,
// by summing over all 2^k outcome vectors.
double enumerate_any_success(int k, double p) {
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        double prob = 1.0;
        for (int j = 0; j < k; ++j) prob *= (mask >> j & 1u) ? p : 1.0 - p;
        if (mask != 0) total += prob;
    }
    return total;
}

}  // namespace

TEST_CASE("init_uniform") {
    SUBCASE("production size with f0 = 0.2") {
        const auto w = World::init_uniform(small_params(128, 16384, 0.5, 0.05), RngStream::derive(1, 0));
        CHECK(w.infected_count() == 3277);
        CHECK(count_flags(w) == 3277);
        CHECK(w.infected_fraction() == 3277.0 / 16384.0);
        for (const auto& p : w.positions()) {
            REQUIRE(p.x < 128);
            REQUIRE(p.y < 128);
        }
        CHECK(site_index_consistent(w));
        CHECK(w.tick_count() == 0);
    }
    SUBCASE("f0 = 0 starts absorbed") {
        const auto w = World::init_uniform(small_params(16, 256, 0.5, 0.05, 0.0), RngStream::derive(1, 0));
        CHECK(w.infected_count() == 0);
        CHECK(w.absorbed());
        CHECK(w.infected_fraction() == 0.0);
    }
    SUBCASE("f0 = 1 infects everyone") {
        const auto w = World::init_uniform(small_params(16, 256, 0.5, 0.05, 1.0), RngStream::derive(1, 0));
        CHECK(w.infected_count() == 256);
        CHECK(w.infected_fraction() == 1.0);
    }
    SUBCASE("half counts round to even") {
        CHECK(World::init_uniform(small_params(4, 4, 0.5, 0.1, 0.125), RngStream::derive(1, 0))
                  .infected_count() == 0);
        CHECK(World::init_uniform(small_params(4, 4, 0.5, 0.1, 0.375), RngStream::derive(1, 0))
                  .infected_count() == 2);
    }
    SUBCASE("positions are uniform over sites") {
        // 4 sites, 40000 agents: each site count ~ Binomial(40000, 1/4).
        const auto w = World::init_uniform(small_params(2, 40000, 0.5, 0.1), RngStream::derive(3, 0));
        const double sigma = std::sqrt(40000 * 0.25 * 0.75);
        for (std::uint32_t y = 0; y < 2; ++y)
            for (std::uint32_t x = 0; x < 2; ++x)
                CHECK(std::abs(static_cast<double>(w.agents_at(x, y).size()) - 10000.0) < 4 * sigma);
    }
    SUBCASE("empty lattice or population is rejected") {
        CHECK_THROWS_AS(World::init_uniform(small_params(0, 10, 0.5, 0.1), RngStream::derive(1, 0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(World::init_uniform(small_params(8, 0, 0.5, 0.1), RngStream::derive(1, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("explicit configurations are validated") {
    const auto sp = small_params(4, 2, 0.5, 0.1);
    CHECK_THROWS_AS(World(sp, {{0, 0}}, {true, false}, RngStream::derive(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(World(sp, {{0, 0}, {4, 0}}, {true, false}, RngStream::derive(1, 0)),
                    std::invalid_argument);
}

TEST_CASE("displacement wraps around the torus") {
    CHECK(displaced({0, 0}, Direction::west, 16) == Position{15, 0});
    CHECK(displaced({15, 3}, Direction::east, 16) == Position{0, 3});
    CHECK(displaced({2, 0}, Direction::south, 16) == Position{2, 15});
    CHECK(displaced({2, 15}, Direction::north, 16) == Position{2, 0});
    CHECK(displaced({0, 0}, Direction::west, 1) == Position{0, 0});
}

TEST_CASE("step_move") {
    SUBCASE("degenerate torus keeps everyone at the origin") {
        auto w = World::init_uniform(small_params(1, 5, 0.5, 0.1), RngStream::derive(1, 0));
        for (int t = 0; t < 20; ++t) {
            w.step_move();
            for (const auto& p : w.positions()) REQUIRE(p == Position{0, 0});
        }
    }
    SUBCASE("every agent moves exactly one step and flags are untouched") {
        auto w = World::init_uniform(small_params(16, 300, 0.5, 0.1), RngStream::derive(9, 0));
        for (int t = 0; t < 50; ++t) {
            const std::vector<Position> before(w.positions().begin(), w.positions().end());
            std::vector<bool> flags;
            for (AgentId a = 0; a < w.agent_count(); ++a) flags.push_back(w.is_infected(a));
            w.step_move();
            for (AgentId a = 0; a < w.agent_count(); ++a) {
                const auto from = before[a];
                const auto to = w.positions()[a];
                bool one_step = false;
                for (auto d : {Direction::east, Direction::west, Direction::north, Direction::south})
                    one_step |= displaced(from, d, 16) == to;
                REQUIRE(one_step);
                REQUIRE(w.is_infected(a) == flags[a]);
            }
            REQUIRE(site_index_consistent(w));
        }
    }
    SUBCASE("directions are uniform") {
        auto w = World(small_params(16, 1, 0.5, 0.1), {{8, 8}}, {false}, RngStream::derive(11, 0));
        std::array<std::uint64_t, 4> counts{};
        constexpr std::uint64_t steps = 1'000'000;
        for (std::uint64_t i = 0; i < steps; ++i) {
            const Position from = w.positions()[0];
            w.step_move();
            const Position to = w.positions()[0];
            for (auto d : {Direction::east, Direction::west, Direction::north, Direction::south})
                if (displaced(from, d, 16) == to) ++counts[static_cast<int>(d)];
        }
        double chi2 = 0.0;
        const double expected = steps / 4.0;
        for (auto c : counts) {
            CHECK(std::abs(c - expected) < 3 * std::sqrt(steps * 0.25 * 0.75));
            chi2 += (c - expected) * (c - expected) / expected;
        }
        CHECK(chi2 < 16.27);  // 3 dof, p = 0.001
    }
}

TEST_CASE("step_infect") {
    SUBCASE("p = 1 infects every exposed agent") {
        World w(small_params(1, 3, 1.0, 0.0), {{0, 0}, {0, 0}, {0, 0}}, {true, true, false},
                RngStream::derive(1, 0));
        w.step_infect();
        CHECK(w.infected_count() == 3);
        CHECK(w.is_infected(2));
    }
    SUBCASE("p = 0 changes nothing") {
        auto w = World::init_uniform(small_params(4, 64, 0.0, 0.1, 0.5), RngStream::derive(2, 0));
        std::vector<bool> before;
        for (AgentId a = 0; a < w.agent_count(); ++a) before.push_back(w.is_infected(a));
        for (int t = 0; t < 10; ++t) {
            w.step_move();
            w.step_infect();
        }
        for (AgentId a = 0; a < w.agent_count(); ++a) CHECK(w.is_infected(a) == before[a]);
    }
    SUBCASE("agents on different sites never infect each other") {
        World w(small_params(4, 2, 1.0, 0.0), {{0, 0}, {1, 0}}, {true, false}, RngStream::derive(1, 0));
        w.step_infect();
        CHECK_FALSE(w.is_infected(1));
    }
    SUBCASE("k = 3 sources at p = 0.5 infect with probability 7/8") {
        const double exact = enumerate_any_success(3, 0.5);
        CHECK(exact == doctest::Approx(0.875));
        constexpr int trials = 100000;
        int hits = 0;
        for (int t = 0; t < trials; ++t) {
            World w(small_params(1, 4, 0.5, 0.0), std::vector<Position>(4), {true, true, true, false},
                    RngStream::derive(5, t));
            w.step_infect();
            hits += w.is_infected(3);
        }
        const double sigma = std::sqrt(exact * (1 - exact) / trials);
        CHECK(std::abs(static_cast<double>(hits) / trials - exact) < 3 * sigma);
    }
    SUBCASE("newly infected agents are not sources in the same pass") {
        // One source, two healthy co-occupants. With snapshot semantics each
        // healthy agent is infected independently with probability p.
        constexpr int trials = 40000;
        int first = 0, second = 0, both = 0;
        for (int t = 0; t < trials; ++t) {
            World w(small_params(1, 3, 0.5, 0.0), std::vector<Position>(3), {true, false, false},
                    RngStream::derive(6, t));
            w.step_infect();
            first += w.is_infected(1);
            second += w.is_infected(2);
            both += w.is_infected(1) && w.is_infected(2);
        }
        const double sigma = std::sqrt(0.25 / trials);
        CHECK(std::abs(first / double(trials) - 0.5) < 4 * sigma);
        CHECK(std::abs(second / double(trials) - 0.5) < 4 * sigma);
        CHECK(std::abs(both / double(trials) - 0.25) < 4 * std::sqrt(0.25 * 0.75 / trials));
    }
    SUBCASE("expected new infections grow with p") {
        // Fixed configuration: site A has 1 source and 2 healthy, site B has
        // 2 sources and 1 healthy, site C only healthy agents.
        const std::vector<Position> pos{{0, 0}, {0, 0}, {0, 0}, {1, 1}, {1, 1}, {1, 1}, {2, 2}, {2, 2}};
        const std::vector<bool> inf{true, false, false, true, true, false, false, false};
        auto expected = [](double p) { return 2 * enumerate_any_success(1, p) + enumerate_any_success(2, p); };
        double previous = -1.0;
        for (double p = 0.0; p <= 1.0; p += 0.05) {
            CHECK(expected(p) >= previous);
            previous = expected(p);
        }
        for (double p : {0.2, 0.6}) {
            constexpr int trials = 20000;
            double sum = 0.0, sum_sq = 0.0;
            for (int t = 0; t < trials; ++t) {
                World w(small_params(4, 8, p, 0.0), pos, inf, RngStream::derive(7, t));
                w.step_infect();
                const double fresh = static_cast<double>(w.infected_count()) - 3.0;
                sum += fresh;
                sum_sq += fresh * fresh;
            }
            const double mean = sum / trials;
            const double sd = std::sqrt(sum_sq / trials - mean * mean);
            CHECK(std::abs(mean - expected(p)) < 4 * sd / std::sqrt(double(trials)));
        }
    }
}

TEST_CASE("step_heal") {
    SUBCASE("q = 1 heals only agents infected at the start of the tick") {
        World w(small_params(1, 4, 1.0, 1.0), std::vector<Position>(4), {true, false, false, false},
                RngStream::derive(1, 0));
        w.step_infect();
        w.step_heal();
        CHECK_FALSE(w.is_infected(0));
        CHECK(w.is_infected(1));
        CHECK(w.is_infected(2));
        CHECK(w.is_infected(3));
        CHECK(w.infected_count() == 3);
    }
    SUBCASE("q = 0 never heals") {
        auto w = World::init_uniform(small_params(8, 64, 0.3, 0.0), RngStream::derive(4, 0));
        std::size_t last = w.infected_count();
        for (int t = 0; t < 300; ++t) {
            w.tick();
            REQUIRE(w.infected_count() >= last);
            last = w.infected_count();
        }
    }
    SUBCASE("healed count is Binomial(N, q)") {
        constexpr int n = 1000;
        constexpr int reps = 10000;
        constexpr double q = 0.3;
        double sum = 0.0, sum_sq = 0.0;
        for (int r = 0; r < reps; ++r) {
            World w(small_params(1, n, 0.5, q), std::vector<Position>(n), std::vector<bool>(n, true),
                    RngStream::derive(8, r));
            w.step_heal();
            const double healed = n - static_cast<double>(w.infected_count());
            sum += healed;
            sum_sq += healed * healed;
        }
        const double mean = sum / reps;
        const double var = sum_sq / reps - mean * mean;
        const double binom_var = n * q * (1 - q);
        CHECK(std::abs(mean - n * q) < 3 * std::sqrt(binom_var / reps));
        CHECK(var == doctest::Approx(binom_var).epsilon(0.05));
    }
}

TEST_CASE("tick") {
    SUBCASE("the all-healthy state is absorbing") {
        auto w = World::init_uniform(small_params(8, 64, 1.0, 0.0, 0.0), RngStream::derive(1, 0));
        for (int t = 0; t < 100; ++t) {
            w.tick();
            REQUIRE(w.infected_count() == 0);
        }
        CHECK(w.tick_count() == 100);
    }
    SUBCASE("absorption persists once reached") {
        auto w = World::init_uniform(small_params(8, 32, 0.2, 0.5), RngStream::derive(2, 0));
        bool absorbed = false;
        for (int t = 0; t < 500; ++t) {
            w.tick();
            if (absorbed) REQUIRE(w.infected_count() == 0);
            absorbed = absorbed || w.absorbed();
        }
        CHECK(absorbed);
    }
    SUBCASE("p = 1, q = 0 saturates a small torus") {
        int saturated = 0;
        for (int run = 0; run < 100; ++run) {
            auto w = World::init_uniform(small_params(4, 32, 1.0, 0.0, 0.5), RngStream::derive(3, run));
            for (int t = 0; t < 200 && w.infected_fraction() < 1.0; ++t) w.tick();
            saturated += w.infected_fraction() == 1.0;
        }
        CHECK(saturated >= 99);
    }
    SUBCASE("identical seeds give identical trajectories") {
        const auto sp = small_params(128, 16384, 0.5, 0.05);
        auto a = World::init_uniform(sp, RngStream::derive(42, 0));
        auto b = World::init_uniform(sp, RngStream::derive(42, 0));
        for (int t = 0; t < 200; ++t) {
            a.tick();
            b.tick();
            REQUIRE(a.infected_count() == b.infected_count());
        }
        CHECK(std::equal(a.positions().begin(), a.positions().end(), b.positions().begin()));
        for (AgentId i = 0; i < a.agent_count(); ++i) REQUIRE(a.is_infected(i) == b.is_infected(i));
        CHECK(a.rng() == b.rng());
    }
    SUBCASE("conservation under random parameters") {
        auto gen = RngStream::derive(2718, 0);
        for (int c = 0; c < 25; ++c) {
            const auto side = static_cast<std::uint32_t>(1 + gen.uniform_index(12));
            const auto n = static_cast<std::uint32_t>(1 + gen.uniform_index(3 * side * side));
            auto sp = small_params(side, n, gen.uniform01(), gen.uniform01(), gen.uniform01());
            auto w = World::init_uniform(sp, RngStream::derive(c, 1));
            for (int t = 0; t < 40; ++t) {
                w.tick();
                REQUIRE(w.agent_count() == n);
                REQUIRE(count_flags(w) == w.infected_count());
                for (const auto& p : w.positions()) REQUIRE((p.x < side && p.y < side));
            }
            REQUIRE(site_index_consistent(w));
        }
    }
}
