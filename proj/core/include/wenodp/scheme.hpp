#ifndef WENODP_SCHEME_HPP_
#define WENODP_SCHEME_HPP_

#include <stdexcept>
#include <string>

namespace wenodp {

inline constexpr const char* kKernelVersion = "0.1.0";

enum class DiffusionScheme { WenoLsz, Mweno, CwenoDz };
enum class ConvectionScheme { WenoJs, WenoM };

/// Default weight-regularization epsilon per diffusion scheme.
inline constexpr double default_eps(DiffusionScheme s) {
  switch (s) {
    case DiffusionScheme::WenoLsz: return 1e-15;
    case DiffusionScheme::Mweno:   return 1e-30;
    case DiffusionScheme::CwenoDz: return 1e-40;
  }
  return 1e-40;
}

/// Parameters consumed by the per-interface diffusion kernels.
struct DiffusionParams {
  DiffusionScheme scheme = DiffusionScheme::CwenoDz;
  double eps = default_eps(DiffusionScheme::CwenoDz);
  int power = 1;  // Z-weight exponent p (CWENO-DZ only)
};

/// Full scheme selection for a run.
struct SchemeConfig {
  DiffusionScheme diffusion = DiffusionScheme::CwenoDz;
  ConvectionScheme convection = ConvectionScheme::WenoJs;
  double eps = default_eps(DiffusionScheme::CwenoDz);
  int power = 1;
  double cfl = 0.4;

  static SchemeConfig for_scheme(DiffusionScheme d,
                                 ConvectionScheme c = ConvectionScheme::WenoJs) {
    SchemeConfig cfg;
    cfg.diffusion = d;
    cfg.convection = c;
    cfg.eps = default_eps(d);
    return cfg;
  }

  DiffusionParams diffusion_params() const { return {diffusion, eps, power}; }
};

inline std::string to_string(DiffusionScheme s) {
  switch (s) {
    case DiffusionScheme::WenoLsz: return "lsz";
    case DiffusionScheme::Mweno:   return "mweno";
    case DiffusionScheme::CwenoDz: return "cweno-dz";
  }
  return "?";
}

inline std::string to_string(ConvectionScheme s) {
  return s == ConvectionScheme::WenoJs ? "js" : "m";
}

inline DiffusionScheme diffusion_scheme_from_string(const std::string& name) {
  if (name == "lsz" || name == "weno-lsz") return DiffusionScheme::WenoLsz;
  if (name == "mweno") return DiffusionScheme::Mweno;
  if (name == "cweno-dz" || name == "cweno") return DiffusionScheme::CwenoDz;
  throw std::invalid_argument("unknown diffusion scheme: " + name);
}

inline ConvectionScheme convection_scheme_from_string(const std::string& name) {
  if (name == "js") return ConvectionScheme::WenoJs;
  if (name == "m") return ConvectionScheme::WenoM;
  throw std::invalid_argument("unknown convection scheme: " + name);
}

}  // namespace wenodp

#endif  // WENODP_SCHEME_HPP_
