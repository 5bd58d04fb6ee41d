#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dehn/bigint.hpp"
#include "dehn/config.hpp"
#include "dehn/words.hpp"

namespace dehn {

/// Horizontal boundary word of a u-corridor in H_n: letters range over the
/// level-n stable letters and the generators of the coned edge group E
/// (level n-1 stable letters and u_{n-2}); no u_{n-1} letters.
struct CorridorWord {
  Word horizontal;
  int level_n = 1;
};

struct RewriteResult {
  Word ambient;                   // Y spelled in ambient letters
  std::size_t intrinsic_length;   // letters of the target basis
  std::size_t pinches_resolved;
};

/// Corridor rewriting: resolve innermost stable-letter pinches through the
/// retraction onto the edge-group basis, then retract to the target basis.
/// `target_index` picks the edge group Gamma_i of H_n. Refuses words outside
/// the supported schema (UnsupportedPinch).
RewriteResult corridor_rewrite(const CorridorWord& x, int target_index,
                               const Config& cfg = Config{});

struct DistortionSample {
  int n = 1;
  int N = 1;
  BigInt area_edge_exact;     // trapezoid cells of the Theta filling in Gamma
  BigInt area_theta_total;    // full Theta area (trapezoids + strip)
  BigInt area_ambient_upper;  // the Type I filling in H_{n+1}
  double log_edge = 0.0;
  std::uint64_t fitted_beta = 0;  // set by check_distortion_inequality
};

struct Witness {
  Word boundary;  // the Theta boundary word
  DistortionSample sample;
};

/// Boundary word of Theta^n_i(N) plus the two filling areas.
Witness make_witness(int n, int N, const Config& cfg = Config{});

struct DistortionReport {
  bool ok = false;
  std::uint64_t beta = 0;
  std::vector<double> slack_log;  // log RHS - log LHS per sample
  std::string note;
};

/// Least power-of-two beta with area_edge <= (beta A e^sqrt(beta A))^2 for
/// every sample, A the ambient upper bound (a conservative check: the true
/// inequality uses the minimal ambient area, which A only bounds above).
DistortionReport check_distortion_inequality(std::vector<DistortionSample>& samples);

}  // namespace dehn
