#include "wva/table.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace wva {

namespace {

const char* coordinate_header(WaveFunctionTable::Representation rep) {
  return rep == WaveFunctionTable::Representation::position ? "x(q/g)"
                                                            : "k(g*p)";
}

}  // namespace

void WaveFunctionTable::validate() const {
  if (grid.size() != amplitudes.size()) {
    throw InputError("wave-function table: grid and amplitudes differ in length");
  }
  if (grid.size() < 2) {
    throw InputError("wave-function table needs at least 2 samples");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InputError("wave-function table grid must be strictly increasing");
    }
  }
}

double WaveFunctionTable::trapezoid_norm() const {
  validate();
  double total = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    total += 0.5 * (grid[i] - grid[i - 1]) *
             (std::norm(amplitudes[i]) + std::norm(amplitudes[i - 1]));
  }
  return total;
}

void WaveFunctionTable::to_csv(std::ostream& os) const {
  validate();
  os << coordinate_header(representation) << ",re,im,abs2\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << grid[i] << ',' << amplitudes[i].real() << ','
       << amplitudes[i].imag() << ',' << std::norm(amplitudes[i]) << '\n';
  }
}

WaveFunctionTable WaveFunctionTable::from_csv(std::istream& is,
                                              Representation representation) {
  WaveFunctionTable table;
  table.representation = representation;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      // Header row; accept any column naming but require non-numeric start.
      if (!line.empty() && (std::isdigit(line[0]) || line[0] == '-' ||
                            line[0] == '+' || line[0] == '.')) {
        throw InputError("wave-function CSV must start with a header row");
      }
      // A coordinate label from the "other" representation is a real mistake
      // (reading a position dump as momentum data), not a naming choice.
      const std::string first_cell = line.substr(0, line.find(','));
      const Representation other =
          representation == Representation::momentum
              ? Representation::position
              : Representation::momentum;
      if (first_cell == coordinate_header(other)) {
        throw WrongRepresentation(
            "wave-function CSV is labeled " + first_cell +
            " but was loaded as the other representation");
      }
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    double values[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(row, cell, ',')) {
        throw InputError("wave-function CSV row needs at least 3 columns: " +
                         line);
      }
      try {
        values[c] = std::stod(cell);
      } catch (const std::exception&) {
        throw InputError("wave-function CSV: cannot parse '" + cell + "'");
      }
    }
    table.grid.push_back(values[0]);
    table.amplitudes.emplace_back(values[1], values[2]);
  }
  table.validate();
  table.norm_estimate = table.trapezoid_norm();
  return table;
}

void WaveFunctionTable::save_csv(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open for writing: " + path);
  to_csv(os);
}

WaveFunctionTable WaveFunctionTable::load_csv(const std::string& path,
                                              Representation representation) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open for reading: " + path);
  return from_csv(is, representation);
}

std::string WaveFunctionTable::to_json() const {
  validate();
  nlohmann::json j;
  j["representation"] =
      representation == Representation::position ? "position" : "momentum";
  j["grid"] = grid;
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const complexd& a : amplitudes) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  j["re"] = re;
  j["im"] = im;
  j["norm_estimate"] = norm_estimate;
  return j.dump(2);
}

WaveFunctionTable WaveFunctionTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("wave-function JSON: ") + e.what());
  }
  WaveFunctionTable table;
  const std::string rep = j.at("representation").get<std::string>();
  if (rep == "position") {
    table.representation = Representation::position;
  } else if (rep == "momentum") {
    table.representation = Representation::momentum;
  } else {
    throw InputError("wave-function JSON: unknown representation " + rep);
  }
  table.grid = j.at("grid").get<std::vector<double>>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) {
    throw InputError("wave-function JSON: re/im length mismatch");
  }
  table.amplitudes.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    table.amplitudes.emplace_back(re[i], im[i]);
  }
  table.norm_estimate = j.value("norm_estimate", 0.0);
  table.validate();
  if (table.norm_estimate == 0.0) table.norm_estimate = table.trapezoid_norm();
  return table;
}

}  // namespace wva
