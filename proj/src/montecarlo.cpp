#include "pentaloss/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace pentaloss {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void SimConfig::validate() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("simulate: p out of range");
    if (levels < 1 || levels > 7) throw std::invalid_argument("simulate: levels must be 1..7");
    if (shots < 1) throw std::invalid_argument("simulate: shots must be >= 1");
    if (jobs < 1 || jobs > 256) throw std::invalid_argument("simulate: jobs must be 1..256");
}

namespace {

bool leaf_lost(std::uint64_t seed, std::uint64_t shot, std::uint64_t leaf, double p) {
    std::uint64_t h = mix64(seed ^ (0xD1B54A32D192ED03ULL * (shot + 1)));
    h = mix64(h ^ (0x9E3779B97F4A7C15ULL * (leaf + 1)));
    return static_cast<double>(h >> 11) * 0x1.0p-53 < p;
}

struct ShotContext {
    const NonPreRecurrence* rec;
    std::uint64_t seed;
    std::uint64_t shot;
    int levels;
    double p;
};

// Preannounced walk: a pentagon is lost once three children are, with early
// exit in both directions.
bool pre_lost(const ShotContext& ctx, int level, std::uint64_t index) {
    if (level == ctx.levels) {
        return leaf_lost(ctx.seed, ctx.shot, index, ctx.p);
    }
    int losses = 0, survivals = 0;
    for (std::uint64_t q = 0; q < 5; ++q) {
        if (pre_lost(ctx, level + 1, index * 5 + q)) {
            if (++losses == 3) return true;
        } else {
            if (++survivals == 3) return false;
        }
    }
    return losses >= 3;
}

// Same semantics without early exit, used by the revealed-loss cross-check.
bool revealed_lost(const ShotContext& ctx, int level, std::uint64_t index) {
    if (level == ctx.levels) {
        return leaf_lost(ctx.seed, ctx.shot, index, ctx.p);
    }
    int losses = 0;
    for (std::uint64_t q = 0; q < 5; ++q) {
        if (revealed_lost(ctx, level + 1, index * 5 + q)) ++losses;
    }
    return losses >= 3;
}

// Non-preannounced walk: run the basis policy on the pentagon, resolving each
// probed child recursively; a child is consumed whether or not it clicks.
bool nonpre_ok(const ShotContext& ctx, int level, std::uint64_t index, Basis basis) {
    if (level == ctx.levels) {
        return !leaf_lost(ctx.seed, ctx.shot, index, ctx.p);
    }
    const MeasurementPolicy& policy = ctx.rec->for_basis(basis).policy;
    std::int32_t at = 0;
    while (true) {
        const PolicyNode& node = policy.nodes[at];
        if (node.is_leaf) return node.leaf == LeafKind::Success;
        bool ok = nonpre_ok(ctx, level + 1, index * 5 + node.probe.qubit, node.probe.basis);
        at = ok ? node.on_click : node.on_lost;
    }
}

}  // namespace

MonteCarlo::MonteCarlo(const PentagonCode& code) : rec_(nonpre_recurrence(code)) {}

MonteCarlo::MonteCarlo(NonPreRecurrence recurrence) : rec_(std::move(recurrence)) {}

std::uint64_t MonteCarlo::count_failures(const SimConfig& config, bool revealed) const {
    auto shot_fails = [&](std::uint64_t shot) {
        ShotContext ctx{&rec_, config.seed, shot, config.levels, config.p};
        if (revealed) return revealed_lost(ctx, 0, 0);
        if (config.mode == LossMode::Preannounced) return pre_lost(ctx, 0, 0);
        return !nonpre_ok(ctx, 0, 0, config.basis);
    };
    int jobs = config.jobs;
    if (config.shots < 1024 || jobs == 1) {
        std::uint64_t fails = 0;
        for (std::uint64_t s = 0; s < config.shots; ++s) fails += shot_fails(s);
        return fails;
    }
    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> workers;
    std::uint64_t chunk = (config.shots + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            std::uint64_t lo = j * chunk;
            std::uint64_t hi = std::min(config.shots, lo + chunk);
            std::uint64_t fails = 0;
            for (std::uint64_t s = lo; s < hi; ++s) fails += shot_fails(s);
            partial[j] = fails;
        });
    }
    for (auto& w : workers) w.join();
    std::uint64_t fails = 0;
    for (auto f : partial) fails += f;
    return fails;
}

SimReport MonteCarlo::finish(const SimConfig& config, std::uint64_t failures,
                             double analytic) const {
    SimReport r;
    r.config = config;
    r.failures = failures;
    r.estimate = static_cast<double>(failures) / static_cast<double>(config.shots);
    r.stderr_est = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(config.shots));
    r.analytic = analytic;
    double sigma = analytic > 0.0 && analytic < 1.0
                       ? std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(config.shots))
                       : r.stderr_est;
    r.z = sigma > 0.0 ? (r.estimate - analytic) / sigma : 0.0;
    return r;
}

SimReport MonteCarlo::run(const SimConfig& config) const {
    config.validate();
    double analytic =
        config.mode == LossMode::Preannounced
            ? iterate_levels([](double x) { return pre_failure(x); }, config.p, config.levels)
            : rec_.iterate(config.p, config.levels)[static_cast<int>(config.basis)];
    return finish(config, count_failures(config, false), analytic);
}

SimReport MonteCarlo::run_revealed(const SimConfig& config) const {
    config.validate();
    double analytic =
        iterate_levels([](double x) { return pre_failure(x); }, config.p, config.levels);
    return finish(config, count_failures(config, true), analytic);
}

std::vector<SimReport> MonteCarlo::sweep(const std::vector<SimConfig>& configs) const {
    if (configs.empty()) throw std::invalid_argument("sweep: empty config list");
    std::vector<SimReport> out;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        SimConfig c = configs[i];
        c.seed = mix64(c.seed ^ (0xA0761D6478BD642FULL * (i + 1)));
        try {
            out.push_back(run(c));
        } catch (const std::exception& e) {
            SimReport r;
            r.config = c;
            r.estimate = r.stderr_est = r.analytic = r.z =
                std::numeric_limits<double>::quiet_NaN();
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string SimReport::csv_header() {
    return "mode,p,levels,shots,seed,estimate,stderr,analytic,z";
}

namespace {
std::string mode_name(LossMode m) {
    return m == LossMode::Preannounced ? "pre" : "nonpre";
}
}  // namespace

std::string SimReport::to_csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%.17g,%d,%llu,%llu,%.17g,%.17g,%.17g,%.6g",
                  mode_name(config.mode).c_str(), config.p, config.levels,
                  static_cast<unsigned long long>(config.shots),
                  static_cast<unsigned long long>(config.seed), estimate, stderr_est, analytic,
                  z);
    return buf;
}

std::string SimReport::to_json_line() const {
    nlohmann::json j;
    if (!error.empty()) j["error"] = error;
    j["mode"] = mode_name(config.mode);
    j["p"] = config.p;
    j["levels"] = config.levels;
    j["shots"] = config.shots;
    j["seed"] = config.seed;
    j["basis"] = std::string(1, basis_letter(config.basis));
    j["failures"] = failures;
    j["estimate"] = estimate;
    j["stderr"] = stderr_est;
    j["analytic"] = analytic;
    j["z"] = z;
    return j.dump();
}

}  // namespace pentaloss
