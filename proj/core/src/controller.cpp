#include "kplex/controller.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kplex/rand_util.hpp"

namespace kplex {

std::vector<int> perturbation_depths() {
    std::vector<int> ls;
    ls.reserve(33);
    for (int i = 0; i < 30; ++i) ls.push_back(i + 2);
    for (int i = 30; i < 33; ++i) ls.push_back(1 << (i - 25));
    return ls;
}

std::vector<ParameterTriple> generate_space() {
    const auto depths = perturbation_depths();
    std::vector<ParameterTriple> space;
    space.reserve(depths.size() * 6 * 21);
    std::uint32_t idx = 0;
    for (int l : depths) {
        for (int e = 95; e <= 100; ++e) {
            for (int b = 70; b <= 90; ++b) {
                space.push_back({l, e, b, idx++});
            }
        }
    }
    return space;
}

void ControllerConfig::validate() const {
    if (kappa < 1) throw std::invalid_argument("kappa must be positive");
    if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    if (epsilon == 0) throw std::invalid_argument("epsilon must be positive");
    if (delta1 < 0 || delta2 < 0) throw std::invalid_argument("reward coefficients must be non-negative");
    if (window == 0) throw std::invalid_argument("window must be positive");
    if (n_prune < static_cast<std::size_t>(kappa)) {
        throw std::invalid_argument("n_prune must be at least kappa");
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

ControllerConfig load_config(std::istream& in) {
    ControllerConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "kappa") cfg.kappa = std::stoi(val);
            else if (key == "alpha") cfg.alpha = std::stoi(val);
            else if (key == "tau") cfg.tau = std::stod(val);
            else if (key == "epsilon") cfg.epsilon = std::stoull(val);
            else if (key == "delta1") cfg.delta1 = std::stod(val);
            else if (key == "delta2") cfg.delta2 = std::stod(val);
            else if (key == "window") cfg.window = std::stoull(val);
            else if (key == "n_prune") cfg.n_prune = std::stoull(val);
            else if (key == "lo_hash_cap") cfg.lo_hash_cap = std::stoull(val);
            else if (key == "quality_mode") {
                if (val == "verbatim") cfg.quality_mode = ControllerConfig::QualityMode::kVerbatim;
                else if (val == "ratio") cfg.quality_mode = ControllerConfig::QualityMode::kRatio;
                else throw std::runtime_error("bad quality_mode '" + val + "'");
            } else if (key == "replacement_mode") {
                if (val == "argmax") cfg.replacement_mode = ControllerConfig::ReplacementMode::kArgmax;
                else if (val == "sample") cfg.replacement_mode = ControllerConfig::ReplacementMode::kSample;
                else throw std::runtime_error("bad replacement_mode '" + val + "'");
            } else {
                throw std::runtime_error("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": bad value for " + key);
        }
    }
    cfg.validate();
    return cfg;
}

ControllerConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    return load_config(in);
}

void save_config(const ControllerConfig& cfg, std::ostream& out) {
    out << "kappa = " << cfg.kappa << "\n"
        << "alpha = " << cfg.alpha << "\n"
        << "tau = " << cfg.tau << "\n"
        << "epsilon = " << cfg.epsilon << "\n"
        << "delta1 = " << cfg.delta1 << "\n"
        << "delta2 = " << cfg.delta2 << "\n"
        << "window = " << cfg.window << "\n"
        << "n_prune = " << cfg.n_prune << "\n"
        << "quality_mode = "
        << (cfg.quality_mode == ControllerConfig::QualityMode::kVerbatim ? "verbatim" : "ratio")
        << "\n"
        << "replacement_mode = "
        << (cfg.replacement_mode == ControllerConfig::ReplacementMode::kArgmax ? "argmax" : "sample")
        << "\n"
        << "lo_hash_cap = " << cfg.lo_hash_cap << "\n";
}

bool LocalOptimaMemory::record(std::uint64_t digest) {
    if (!set_.insert(digest).second) return false;
    if (cap_ > 0) {
        order_.push_back(digest);
        while (order_.size() > cap_) {
            set_.erase(order_.front());
            order_.pop_front();
        }
    }
    return true;
}

PrelearnResult prelearn(SearchContext& ctx, const ControllerConfig& cfg,
                        const std::function<void(const KPlexState&)>& on_new_best) {
    cfg.validate();
    PrelearnResult out;
    out.memory = LocalOptimaMemory(cfg.lo_hash_cap);

    auto space = generate_space();
    std::vector<std::uint32_t> revisits(space.size(), 0);

    bool stopped = false;
    for (int round = 0; round < cfg.alpha && !stopped; ++round) {
        for (std::size_t ti = 0; ti < space.size(); ++ti) {
            if (ctx.stop()) {
                stopped = true;
                break;
            }
            const auto& t = space[ti];
            diversify(ctx, t.moves, t.directed_pct, t.strength_pct);
            intensify(ctx);
            ++out.iterations;
            if (!out.memory.record(ctx.state.hash())) ++revisits[ti];
            if (ctx.state.size() > ctx.best_size && on_new_best) on_new_best(ctx.state);
        }
    }

    std::vector<std::size_t> order(space.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return revisits[a] < revisits[b];  // stable keeps enumeration order on ties
    });
    const std::size_t keep = std::min(cfg.n_prune, space.size());
    out.ranked.reserve(keep);
    out.revisits.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        out.ranked.push_back(space[order[i]]);
        out.revisits.push_back(revisits[order[i]]);
    }
    return out;
}

Controller::Controller(ControllerConfig cfg, std::vector<ParameterTriple> ranked,
                       LocalOptimaMemory memory)
    : cfg_(cfg), ranked_(std::move(ranked)), memory_(std::move(memory)) {
    cfg_.validate();
    if (ranked_.empty()) throw std::invalid_argument("Controller: empty action space");
    const int m = std::min<int>(cfg_.kappa, static_cast<int>(ranked_.size()));
    learn_pos_.resize(m);
    std::iota(learn_pos_.begin(), learn_pos_.end(), 0);
    omega_.assign(m, 1.0);
    windows_.assign(m, {});
}

const ParameterTriple& Controller::slot_triple(int slot) const {
    return ranked_[static_cast<std::size_t>(learn_pos_[static_cast<std::size_t>(slot)])];
}

std::vector<double> Controller::selection_probabilities() const {
    const double mx = *std::max_element(omega_.begin(), omega_.end());
    std::vector<double> p(omega_.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        p[i] = std::exp((omega_[i] - mx) / cfg_.tau);
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return p;
}

std::pair<ParameterTriple, int> Controller::select(std::mt19937_64& rng) const {
    const auto p = selection_probabilities();
    const double u = uniform_real(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return {slot_triple(static_cast<int>(i)), static_cast<int>(i)};
    }
    const int last = static_cast<int>(p.size()) - 1;
    return {slot_triple(last), last};
}

double Controller::compute_reward(std::uint64_t digest, Vertex size, int slot,
                                  Vertex best_size) {
    assert(best_size > 0 && best_size >= size);
    if (!memory_.record(digest)) return 0.0;
    const double distance = cfg_.delta1 * static_cast<double>(slots() - slot);
    double quality;
    if (cfg_.quality_mode == ControllerConfig::QualityMode::kVerbatim) {
        const double rel = (static_cast<double>(size) - static_cast<double>(best_size)) /
                           static_cast<double>(best_size);
        quality = (1.0 - rel) * (1.0 - rel) * 10.0;
    } else {
        const double ratio = static_cast<double>(size) / static_cast<double>(best_size);
        quality = ratio * ratio * 10.0;
    }
    return distance + cfg_.delta2 * quality;
}

void Controller::apply_reward(int slot, double reward) {
    auto& w = windows_[static_cast<std::size_t>(slot)];
    w.push_back(reward);
    while (w.size() > cfg_.window) w.pop_front();
    omega_[static_cast<std::size_t>(slot)] =
        std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
}

std::vector<double> Controller::estimate_probabilities(std::span<const int> known_pos,
                                                       std::span<const double> known_prob,
                                                       int total) {
    assert(!known_pos.empty() && known_pos.size() == known_prob.size());
    std::vector<double> est(static_cast<std::size_t>(total), 0.0);
    const int first = known_pos.front();
    const int last = known_pos.back();
    std::size_t seg = 0;
    for (int x = 0; x < total; ++x) {
        if (x < first) {
            est[static_cast<std::size_t>(x)] = known_prob.front() / static_cast<double>(first - x);
        } else if (x > last) {
            est[static_cast<std::size_t>(x)] = known_prob.back() / static_cast<double>(x - last);
        } else {
            while (seg + 1 < known_pos.size() && known_pos[seg + 1] < x) ++seg;
            if (x == known_pos[seg]) {
                est[static_cast<std::size_t>(x)] = known_prob[seg];
            } else if (seg + 1 < known_pos.size() && x == known_pos[seg + 1]) {
                est[static_cast<std::size_t>(x)] = known_prob[seg + 1];
            } else {
                const double x0 = known_pos[seg];
                const double x1 = known_pos[seg + 1];
                const double t = (static_cast<double>(x) - x0) / (x1 - x0);
                est[static_cast<std::size_t>(x)] =
                    known_prob[seg] + t * (known_prob[seg + 1] - known_prob[seg]);
            }
        }
    }
    return est;
}

void Controller::update_learning_list(std::mt19937_64& rng) {
    if (ranked_.size() <= learn_pos_.size()) return;  // nothing outside

    const auto probs = selection_probabilities();
    int worst = 0;
    for (int i = 1; i < slots(); ++i) {
        if (probs[static_cast<std::size_t>(i)] <= probs[static_cast<std::size_t>(worst)]) {
            worst = i;  // <= keeps the largest index on ties
        }
    }

    const auto est = estimate_probabilities(
        learn_pos_, probs, static_cast<int>(ranked_.size()));

    std::vector<char> in_learn(ranked_.size(), 0);
    for (int pos : learn_pos_) in_learn[static_cast<std::size_t>(pos)] = 1;

    int incoming = -1;
    if (cfg_.replacement_mode == ControllerConfig::ReplacementMode::kArgmax) {
        double best = -1.0;
        for (std::size_t x = 0; x < ranked_.size(); ++x) {
            if (in_learn[x]) continue;
            if (est[x] > best) {
                best = est[x];
                incoming = static_cast<int>(x);
            }
        }
    } else {
        double total = 0.0;
        for (std::size_t x = 0; x < ranked_.size(); ++x) {
            if (!in_learn[x]) total += est[x];
        }
        const double u = uniform_real(rng) * total;
        double acc = 0.0;
        for (std::size_t x = 0; x < ranked_.size(); ++x) {
            if (in_learn[x]) continue;
            acc += est[x];
            incoming = static_cast<int>(x);
            if (u < acc) break;
        }
    }
    assert(incoming >= 0);

    learn_pos_.erase(learn_pos_.begin() + worst);
    learn_pos_.insert(std::upper_bound(learn_pos_.begin(), learn_pos_.end(), incoming),
                      incoming);

    std::fill(omega_.begin(), omega_.end(), 1.0);
    for (auto& w : windows_) w.clear();
}

}  // namespace kplex
