#include "pctsp/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace pctsp {

namespace {

nlohmann::json parse_stream(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  return out;
}

}  // namespace

Instance read_instance(std::istream& in) {
  const nlohmann::json j = parse_stream(in);
  Instance inst;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean") {
      inst.kind = InstanceKind::euclidean;
      if (j.contains("weights")) {
        throw std::invalid_argument("euclidean instance must not carry weights");
      }
      inst.points = j.at("points").get<std::vector<std::vector<double>>>();
    } else if (kind == "matrix") {
      inst.kind = InstanceKind::matrix;
      if (j.contains("points")) {
        throw std::invalid_argument("matrix instance must not carry points");
      }
      const auto rows = j.at("weights").get<std::vector<std::vector<double>>>();
      const size_t n = rows.size();
      inst.weights.reserve(n * n);
      for (const auto& row : rows) {
        if (row.size() != n) {
          throw std::invalid_argument("weight matrix must be square");
        }
        inst.weights.insert(inst.weights.end(), row.begin(), row.end());
      }
    } else {
      throw std::invalid_argument("unknown instance kind: " + kind);
    }
    inst.colors = j.at("colors").get<std::vector<int>>();
    inst.k = j.at("k").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad instance file: ") + e.what());
  }
  inst.validate();
  return inst;
}

Instance read_instance_file(const std::string& path) {
  auto in = open_input(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  nlohmann::json j;
  j["k"] = inst.k;
  j["colors"] = inst.colors;
  if (inst.kind == InstanceKind::euclidean) {
    j["kind"] = "euclidean";
    j["points"] = inst.points;
  } else {
    j["kind"] = "matrix";
    const int n = inst.size();
    std::vector<std::vector<double>> rows(n);
    for (int i = 0; i < n; ++i) {
      rows[i].assign(inst.weights.begin() + static_cast<size_t>(i) * n,
                     inst.weights.begin() + static_cast<size_t>(i + 1) * n);
    }
    j["weights"] = rows;
  }
  out << j.dump(2) << '\n';
}

void write_instance_file(const std::string& path, const Instance& inst) {
  auto out = open_output(path);
  write_instance(out, inst);
}

Tour read_tour(std::istream& in) {
  const nlohmann::json j = parse_stream(in);
  try {
    return Tour{j.at("order").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad tour file: ") + e.what());
  }
}

Tour read_tour_file(const std::string& path) {
  auto in = open_input(path);
  return read_tour(in);
}

void write_tour(std::ostream& out, const Tour& tour) {
  nlohmann::json j;
  j["order"] = tour.order;
  out << j.dump() << '\n';
}

void write_tour_file(const std::string& path, const Tour& tour) {
  auto out = open_output(path);
  write_tour(out, tour);
}

}  // namespace pctsp
