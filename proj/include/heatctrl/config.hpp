#pragma once

#include "heatctrl/descent.hpp"

#include <string>

namespace heatctrl {

/// Parsed run configuration. Flat key=value text, '#' comments.
///
/// Keys (defaults in parentheses):
///   variant       boundary | boundary-extended | inner      [required]
///   T             time horizon > 0                          [required]
///   Nx, Nt        interval counts >= 2                      [required]
///   data          heat-exact-sinh | eigenmode | zero-target | file  [required]
///   u0_file       nodal samples, one per line   [required when data=file]
///   uT_file       nodal samples, one per line   [required when data=file]
///   omega_a       left end of omega             [required when variant=inner]
///   omega_b       right end of omega            [required when variant=inner]
///   max_iters     (500)
///   tol_g         gradient tolerance, relative to first norm (1e-8)
///   tol_e         energy tolerance, absolute (1e-10)
///   method        cg | sd (cg)
///   record_every  history stride (1)
///   output_dir    (out)
///   fwd_nx        forward-check spatial intervals (2*Nx)
///   fwd_nt        forward-check time steps (2*Nt)
struct Config {
    std::string variant;
    double T = 0.0;
    int nx = 0;
    int nt = 0;
    std::string data;
    std::string u0_file;
    std::string uT_file;
    double omega_a = 0.0;
    double omega_b = 0.0;
    DescentOptions options;
    std::string output_dir = "out";
    int fwd_nx = 0; ///< resolved default: 2*nx
    int fwd_nt = 0; ///< resolved default: 2*nt

    Variant make_variant() const;
};

/// Parses config text. Unknown keys, missing required keys, and invariant
/// violations throw ConfigError with the offending line number.
Config parse_config(const std::string& text);

/// Reads and parses a config file. Throws ConfigError on I/O failure.
Config load_config(const std::string& path);

} // namespace heatctrl
