#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aifnav/harness.hpp"
#include "aifnav/roomworld.hpp"
#include "aifnav/snapshot.hpp"

namespace {

void add_run_options(CLI::App* cmd, aifnav::RunConfig& cfg) {
    cmd->add_option("--env", cfg.env, "preset name or environment file");
    cmd->add_option("--seed", cfg.seed, "run seed");
    cmd->add_option("--max-steps", cfg.max_steps, "step budget per episode");
    cmd->add_option("--gamma", cfg.planner.gamma, "policy softmax temperature");
    cmd->add_option("--horizon", cfg.planner.horizon, "planning horizon");
    cmd->add_option("--novelty-weight", cfg.planner.novelty_weight,
                    "parameter-novelty bonus weight (0 = bare information gain)");
    cmd->add_option("--lr-exp", cfg.learning.lr_experienced,
                    "learning rate for experienced transitions");
    cmd->add_option("--lr-imag", cfg.learning.lr_imagined,
                    "learning rate for imagined transitions");
    cmd->add_option("--confidence-threshold", cfg.confidence_threshold,
                    "below this max-belief the agent is lost and freezes learning");
    cmd->add_option("--accuracy-threshold", cfg.accuracy_threshold,
                    "transition accuracy needed to call exploration complete");
}

void print_run(const aifnav::RunResult& r) {
    std::printf("env=%s seed=%llu start_room=%d\n", r.env.c_str(),
                static_cast<unsigned long long>(r.seed), r.start_room);
    if (r.steps_to_discovery)
        std::printf("steps_to_discovery=%d\n", *r.steps_to_discovery);
    else
        std::printf("steps_to_discovery=none\n");
    if (r.steps_to_complete)
        std::printf("steps_to_complete=%d\n", *r.steps_to_complete);
    else
        std::printf("steps_to_complete=none\n");
    std::printf("final_accuracy=%.4f\n", r.final_accuracy);
    std::printf("states=%d observations=%d\n", r.model.num_states(), r.model.num_obs());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active-inference exploration agent for aliased grid-room worlds"};
    app.require_subcommand(1);

    aifnav::RunConfig cfg;
    bool random = false;

    auto* run = app.add_subcommand("run", "run a single exploration episode");
    add_run_options(run, cfg);
    run->add_flag("--dump-efe", cfg.dump_efe, "write the per-step EFE field tables");
    run->add_flag("--random", random, "use the uniform-random baseline policy");
    run->add_option("--out", cfg.output_dir, "directory for trace/model/transition files");

    int n_seeds = 10;
    std::string batch_out;
    auto* batch_cmd = app.add_subcommand("batch", "multi-seed sweep with baselines");
    add_run_options(batch_cmd, cfg);
    batch_cmd->add_option("--seeds", n_seeds, "number of seeds (base seed from --seed)");
    batch_cmd->add_option("--out", batch_out, "file for the summary table");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "shortest covering-walk length for an environment");
    std::string oracle_env = "grid3x3";
    uint64_t oracle_seed = 0;
    bool oracle_all = false;
    oracle_cmd->add_option("--env", oracle_env, "preset name or environment file");
    oracle_cmd->add_option("--seed", oracle_seed, "seed choosing the start room");
    oracle_cmd->add_flag("--all-starts", oracle_all, "report every start room");

    auto* dump_cmd = app.add_subcommand("dump-env", "write a preset as a config file");
    std::string dump_env = "grid3x3";
    std::string dump_out;
    dump_cmd->add_option("--env", dump_env, "preset name or environment file");
    dump_cmd->add_option("--out", dump_out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cfg.planner.rng_seed = cfg.seed;
            const auto result =
                random ? aifnav::random_baseline(cfg) : aifnav::run_episode(cfg);
            print_run(result);
        } else if (batch_cmd->parsed()) {
            const auto rows = aifnav::batch(cfg, {cfg.env}, n_seeds);
            const std::string table = aifnav::batch_csv(rows);
            if (batch_out.empty()) {
                std::cout << table;
            } else {
                std::ofstream out(batch_out, std::ios::binary);
                out << table;
            }
        } else if (oracle_cmd->parsed()) {
            const auto spec = aifnav::load_env(oracle_env);
            if (oracle_all) {
                for (int room = 0; room < spec.room_count(); ++room)
                    std::printf("start_room=%d oracle_steps=%d\n", room,
                                aifnav::oracle_steps(spec, room));
            } else {
                auto [state, color, blocked] = aifnav::reset(spec, oracle_seed);
                const int room = spec.room_index(state.row, state.col);
                std::printf("start_room=%d oracle_steps=%d\n", room,
                            aifnav::oracle_steps(spec, room));
            }
        } else if (dump_cmd->parsed()) {
            const auto spec = aifnav::load_env(dump_env);
            const std::string text = aifnav::env_to_json(spec);
            if (dump_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(dump_out, std::ios::binary);
                out << text;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
