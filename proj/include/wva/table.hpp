#ifndef WVA_TABLE_HPP
#define WVA_TABLE_HPP

// Sampled wave functions on a one-dimensional grid, in either representation,
// with CSV and JSON serialization.  Tables are the exchange format between
// the transform pipeline, tabulated probes and the CLI dump commands.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "wva/errors.hpp"

namespace wva {

using complexd = std::complex<double>;

struct WaveFunctionTable {
  enum class Representation { momentum, position };

  Representation representation = Representation::momentum;
  std::vector<double> grid;        // strictly increasing
  std::vector<complexd> amplitudes;
  // Trapezoid estimate of integral |amplitude|^2 over the grid; filled by
  // the producers, recomputable via trapezoid_norm().
  double norm_estimate = 0.0;

  // Throws InputError unless grid and amplitudes have equal length >= 2 and
  // the grid is strictly increasing.
  void validate() const;

  double trapezoid_norm() const;

  // CSV layout: one header row naming the units (position in q/g, momentum
  // in g*p), then rows "coordinate,re,im,abs2" at 17 significant digits.
  void to_csv(std::ostream& os) const;
  static WaveFunctionTable from_csv(std::istream& is,
                                    Representation representation);

  void save_csv(const std::string& path) const;
  static WaveFunctionTable load_csv(const std::string& path,
                                    Representation representation);

  std::string to_json() const;
  static WaveFunctionTable from_json(const std::string& text);
};

}  // namespace wva

#endif  // WVA_TABLE_HPP
