#pragma once

#include "esbp/discretization.hpp"

#include <stdexcept>
#include <vector>

namespace esbp {

struct State {
    std::vector<double> u, v;
    double t = 0;
};

State zero_state(const Domain& dom);

// cfl * min over points of (reference spacing / max transformed speed)
double estimate_dt(const ElasticOperator& op, double cfl, int n_dirs = 360);

struct Receiver {
    int block = 0, node = 0;
    double X1 = 0, X2 = 0;  // node position actually sampled
};

Receiver locate_receiver(const Domain& dom, Vec2 X);

struct ReceiverSample {
    double t, u1, u2, v1, v2;
};

struct EnergySample {
    double t;
    EnergyBreakdown E;
};

struct RunOptions {
    double dt = 0;
    int n_steps = 0;
    int energy_every = 0;  // 0 disables the energy trace
    int receiver_every = 1;
    std::vector<Receiver> receivers;
};

struct RunResult {
    std::vector<EnergySample> energy;
    std::vector<std::vector<ReceiverSample>> receivers;
};

struct InstabilityError : std::runtime_error {
    int step;
    InstabilityError(const std::string& what, int s) : std::runtime_error(what), step(s) {}
};

RunResult rk4_advance(const ElasticOperator& op, State& s, const ForcingFn* forcing, const RunOptions& opt);

double ricker(double t, double alpha, double t0);

struct PointWeights {
    std::vector<int> block, node;
    std::vector<double> w;  // sum of w * J * H equals one
};

PointWeights discrete_delta(const Domain& dom, Vec2 X0);

// f_J = fhat_J * W(t) * delta
ForcingFn point_source(const Domain& dom, const PointWeights& delta, Vec2 fhat, double alpha, double t0);

}
