#include <benchmark/benchmark.h>

#include "aifnav/harness.hpp"
#include "aifnav/learning.hpp"
#include "aifnav/planner.hpp"

namespace {

using namespace aifnav;

// A model mid-exploration: the agent has walked half of grid4x4.
struct Fixture {
    GenerativeModel model = GenerativeModel::create(0);
    Belief belief{{1.0}, Pose{0, 0}, 1.0};

    Fixture() {
        LearningConfig cfg;
        extend_map(model, belief, {Action::South, Action::West}, cfg, false);
        Pose pose{0, 0};
        for (Action a : {Action::North, Action::North, Action::East, Action::East}) {
            pose = pose + delta(a);
            const StateId prev = *model.state_at(pose + delta(inverse(a)));
            StateId cur;
            if (auto s = model.state_at(pose)) {
                cur = *s;
            } else {
                cur = model.grow_state(pose, StateStatus::Imagined);
            }
            std::vector<double> probs(model.num_states(), 0.0);
            probs[cur] = 1.0;
            Belief next{probs, pose, 1.0};
            Belief prev_b{std::vector<double>(model.num_states(), 0.0), pose, 1.0};
            prev_b.state_probs[prev] = 1.0;
            if (model.num_obs() < 4) model.grow_observation(model.num_obs());
            update_on_step(model, prev_b, a, next,
                           StepOutcome{true, model.num_obs() - 1, {}}, cfg, false);
            extend_map(model, next, {}, cfg, false);
            belief = next;
        }
    }
};

void BM_plan_step(benchmark::State& state) {
    Fixture f;
    PlannerConfig cfg;
    cfg.horizon = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto policies = plan_policies(f.model, f.belief, cfg);
        benchmark::DoNotOptimize(policies);
    }
}
BENCHMARK(BM_plan_step)->Arg(2)->Arg(3)->Arg(4);

void BM_infer_step(benchmark::State& state) {
    Fixture f;
    StepOutcome outcome{true, 1, {}};
    for (auto _ : state) {
        auto b = infer_state(f.model, f.belief, Action::West, outcome);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_infer_step);

void BM_episode_grid3x3(benchmark::State& state) {
    RunConfig cfg;
    cfg.env = "grid3x3";
    cfg.max_steps = 150;
    for (auto _ : state) {
        cfg.seed += 1;
        cfg.planner.rng_seed = cfg.seed;
        auto r = run_episode(cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_episode_grid3x3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
