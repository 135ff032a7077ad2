// Copyright 2026 The homewheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "homewheel/cli.hpp"

#include <array>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "homewheel/errors.hpp"
#include "homewheel/executor.hpp"
#include "homewheel/planner.hpp"
#include "homewheel/scaling.hpp"
#include "homewheel/tegument.hpp"
#include "homewheel/trajectory_io.hpp"

namespace homewheel {
namespace {

struct CommonOptions {
    std::string config;
    std::string policy = "strict";
    double sample_rate = kDefaultSampleRate;

    ValidationPolicy validation_policy() const {
        return policy == "lenient" ? ValidationPolicy::lenient() : ValidationPolicy::strict();
    }

    Trajectory defaults() const {
        Trajectory base;
        if (!config.empty()) base = apply_config_json(read_file(config), base);
        return base;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_sample_rate = true) {
    cmd->add_option("--config", opts.config, "JSON file overriding geometry and servo limits")
        ->check(CLI::ExistingFile);
    cmd->add_option("--policy", opts.policy, "strict rejects Servo 1 motion while disengaged; lenient warns")
        ->check(CLI::IsMember({"strict", "lenient"}))
        ->capture_default_str();
    if (with_sample_rate) {
        cmd->add_option("--sample-rate-hz", opts.sample_rate, "trace sampling rate")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
}

std::string f9(double v) { return fmt::format("{:.9f}", v); }

void print_violations(std::ostream& out, const std::vector<Violation>& violations) {
    for (const auto& v : violations) out << "violation=" << describe(v) << '\n';
}

// Validates, simulates, and checks twist integrity; prints the key=value report.
// Returns true when the run is clean.
bool report_run(std::ostream& out, const Trajectory& traj, const ValidationPolicy& policy, double sample_rate,
                std::optional<SimTrace>* trace_out = nullptr) {
    const auto violations = validate_trajectory(traj, policy);
    print_violations(out, violations);

    bool simulated = false;
    bool integrity_ok = true;
    if (validate_trajectory(traj, ValidationPolicy::lenient()).empty()) {
        SimTrace trace = simulate(traj, sample_rate);
        const IntegrityReport report = check_integrity(twist_history(trace), traj.limits);
        integrity_ok = report.ok();
        for (const auto& e : trace.events) {
            out << fmt::format("event={} t={}: {}\n", to_string(e.kind), f9(e.t), e.detail);
        }
        for (const auto& v : report.violations) {
            out << fmt::format("twist_violation={} t={} value={}\n", to_string(v.segment), f9(v.t), f9(v.value));
        }
        out << fmt::format("theta_wheel={} deg, x={} m\n", f9(trace.final_theta()), f9(trace.final_x()));
        out << "max_twist_body_gantry_deg=" << f9(report.max_abs_twist[0]) << '\n';
        out << "max_twist_shaft_axial_deg=" << f9(report.max_abs_twist[1]) << '\n';
        out << "max_twist_wrist_deg=" << f9(report.max_abs_twist[2]) << '\n';
        out << "integrity=" << (report.ok() ? "ok" : "violated") << '\n';
        out << "event_count=" << trace.events.size() << '\n';
        simulated = true;
        if (trace_out) *trace_out = std::move(trace);
    }
    out << "simulated=" << (simulated ? "yes" : "no") << '\n';
    out << "violation_count=" << violations.size() << '\n';
    return violations.empty() && simulated && integrity_ok;
}

int finish(std::ostream& out, bool clean) {
    out << "status=" << (clean ? "ok" : "failed") << '\n';
    return clean ? kExitOk : kExitViolation;
}

void write_trace(const std::string& path, const Trajectory& traj, double sample_rate,
                 const std::optional<SimTrace>& trace) {
    if (path.empty()) return;
    write_file(path, write_trace_csv(trace ? *trace : simulate(traj, sample_rate)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kinematic simulator, verifier, and planner for the three-servo homeostatic wheel", "homewheel"};
    app.require_subcommand(1);

    // simulate
    CommonOptions sim_opts;
    int sim_n = 1;
    double sim_segment = kDefaultSegmentDuration;
    std::optional<double> sim_radius;
    std::string sim_out, sim_traj_out;
    auto* sim = app.add_subcommand("simulate", "Build and simulate the 2n-turn rotation routine");
    sim->add_option("--n", sim_n, "loop iterations; the wheel turns 720 degrees per iteration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--radius-m", sim_radius, "wheel radius")->check(CLI::PositiveNumber);
    sim->add_option("--segment-s", sim_segment, "duration of each servo move")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--out", sim_out, "trace CSV output");
    sim->add_option("--traj-out", sim_traj_out, "trajectory JSON output");
    add_common(sim, sim_opts);

    // plan
    CommonOptions plan_opts;
    std::optional<double> plan_target, plan_distance_m;
    std::vector<double> plan_start;
    double plan_segment = kDefaultSegmentDuration;
    std::string plan_out, plan_trace_out;
    auto* plan = app.add_subcommand("plan", "Plan a signed wheel rotation or rolling distance");
    auto* target_opt = plan->add_option("--target-deg", plan_target, "signed wheel rotation");
    auto* distance_opt = plan->add_option("--distance-m", plan_distance_m, "signed rolling distance");
    target_opt->excludes(distance_opt);
    plan->add_option("--start-deg", plan_start, "start state s1,s2,s3")->delimiter(',')->expected(3);
    plan->add_option("--segment-s", plan_segment, "minimum duration of each servo move")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    plan->add_option("--out", plan_out, "trajectory JSON output");
    plan->add_option("--trace-out", plan_trace_out, "trace CSV output");
    add_common(plan, plan_opts);

    // check
    CommonOptions check_opts;
    std::string check_path;
    auto* check = app.add_subcommand("check", "Verify a trajectory JSON or trace CSV file");
    check->add_option("traj,--traj", check_path, "file to verify")->required()->check(CLI::ExistingFile);
    add_common(check, check_opts);

    // gait
    CommonOptions gait_opts;
    double gait_period = 8.0;
    int gait_cycles = 1;
    std::string gait_out, gait_trace_out;
    auto* gait = app.add_subcommand("gait", "Generate the periodic rectification gait");
    gait->add_option("--period-s", gait_period, "gait period")->check(CLI::PositiveNumber)->capture_default_str();
    gait->add_option("--cycles", gait_cycles, "number of periods")->check(CLI::PositiveNumber)->capture_default_str();
    gait->add_option("--out", gait_out, "trajectory JSON output");
    gait->add_option("--trace-out", gait_trace_out, "trace CSV output");
    add_common(gait, gait_opts);

    // scale
    ScalingModel model;
    std::vector<double> lengths;
    auto* scale_cmd = app.add_subcommand("scale", "Mass, force, and acceleration across wheel sizes");
    scale_cmd->add_option("--L,--length-m", lengths, "comma-separated sizes (default: the reference size)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    scale_cmd->add_option("--L-ref-m", model.length_ref, "reference size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scale_cmd->add_option("--m-ref-kg", model.mass_ref, "mass at the reference size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scale_cmd->add_option("--F-ref-n", model.force_ref, "actuator force at the reference size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<const char*> argv{"homewheel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sim->parsed()) {
            Trajectory base = sim_opts.defaults();
            if (sim_radius) base.geometry.wheel_radius = *sim_radius;
            const Trajectory traj = build_rotate_wheel_2n(sim_n, sim_segment, base.geometry, base.limits);
            std::optional<SimTrace> trace;
            const bool clean = report_run(out, traj, sim_opts.validation_policy(), sim_opts.sample_rate, &trace);
            if (!sim_traj_out.empty()) write_file(sim_traj_out, write_trajectory_json(traj));
            if (trace) write_trace(sim_out, traj, sim_opts.sample_rate, trace);
            return finish(out, clean);
        }

        if (plan->parsed()) {
            if (!plan_target && !plan_distance_m) {
                err << "plan: one of --target-deg or --distance-m is required\n" << plan->help();
                return kExitUsage;
            }
            const Trajectory base = plan_opts.defaults();
            ServoState start{};
            if (!plan_start.empty()) start = {plan_start[0], plan_start[1], plan_start[2]};
            const Trajectory traj =
                plan_target ? plan_rotation(*plan_target, start, base.limits, plan_segment, base.geometry)
                            : plan_distance(*plan_distance_m, base.geometry, start, base.limits, plan_segment);
            out << "segments=" << traj.segment_count() << '\n';
            out << "engaged_sweeps=" << count_engaged_sweeps(traj) << '\n';
            out << "reconfigurations=" << count_reconfigurations(traj) << '\n';
            std::optional<SimTrace> trace;
            const bool clean = report_run(out, traj, plan_opts.validation_policy(), plan_opts.sample_rate, &trace);
            if (!plan_out.empty()) write_file(plan_out, write_trajectory_json(traj));
            if (trace) write_trace(plan_trace_out, traj, plan_opts.sample_rate, trace);
            return finish(out, clean);
        }

        if (check->parsed()) {
            const Trajectory base = check_opts.defaults();
            const std::string text = read_file(check_path);
            const Trajectory traj = parse_trajectory_text(text, base);
            out << "waypoints=" << traj.waypoints.size() << '\n';
            return finish(out, report_run(out, traj, check_opts.validation_policy(), check_opts.sample_rate));
        }

        if (gait->parsed()) {
            const Trajectory base = gait_opts.defaults();
            Trajectory traj;
            try {
                traj = generate_gait(gait_period, gait_cycles, base.limits, base.geometry);
            } catch (const RateInfeasible& e) {
                out << "error=RateInfeasible: " << e.what() << '\n';
                out << "min_period_s=" << f9(gait_min_period(base.limits)) << '\n';
                return finish(out, false);
            }
            out << "segments=" << traj.segment_count() << '\n';
            std::optional<SimTrace> trace;
            const bool clean = report_run(out, traj, gait_opts.validation_policy(), gait_opts.sample_rate, &trace);
            if (!gait_out.empty()) write_file(gait_out, write_trajectory_json(traj));
            if (trace) write_trace(gait_trace_out, traj, gait_opts.sample_rate, trace);
            return finish(out, clean);
        }

        if (scale_cmd->parsed()) {
            if (lengths.empty()) lengths.push_back(model.length_ref);
            const ScaledQuantities first = scale(model, lengths.front());
            for (double length : lengths) {
                const ScaledQuantities q = scale(model, length);
                out << fmt::format("L_m={:.9g} mass_kg={:.9g} force_n={:.9g} accel_mps2={:.9g} accel_ratio={:.9g}\n",
                                   length, q.mass, q.force, q.accel, q.accel / first.accel);
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse_error=" << e.what() << '\n';
        return kExitParse;
    } catch (const InvalidParameter& e) {
        err << "error=InvalidParameter: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error=" << e.what() << '\n';
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace homewheel
