#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

enum class Errc {
  NonHermitian,
  NoConvergence,
  BadDims,
  BadSites,
  UnsupportedCombination,
  NotAState,
  NegativeSpectrum,
  NotAWState,
  BadTemperature,
  BadGamma,
  ZeroCoupling,
  NoRoot,
  BadFigureId,
  BadOverride,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BadDims: return "BadDims";
    case Errc::BadSites: return "BadSites";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::NotAState: return "NotAState";
    case Errc::NegativeSpectrum: return "NegativeSpectrum";
    case Errc::NotAWState: return "NotAWState";
    case Errc::BadTemperature: return "BadTemperature";
    case Errc::BadGamma: return "BadGamma";
    case Errc::ZeroCoupling: return "ZeroCoupling";
    case Errc::NoRoot: return "NoRoot";
    case Errc::BadFigureId: return "BadFigureId";
    case Errc::BadOverride: return "BadOverride";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace xychain
