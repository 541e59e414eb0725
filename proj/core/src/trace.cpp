#include "tad/trace.hpp"

#include <charconv>
#include <cstddef>
#include <string>
#include <system_error>

#include "tad/errors.hpp"
#include "tad/natural.hpp"

namespace tad::ad {

std::vector<std::string> trace_lines(
    const BackwardTrace& trace,
    const std::function<std::string(const Value&)>& show) {
  std::vector<std::string> lines;
  lines.reserve(trace.snapshots.size());
  for (const auto& row : trace.snapshots) {
    if (row.size() != trace.names.size()) {
      throw ContractViolation("trace row width disagrees with its names");
    }
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) {
        line += ',';
      }
      line += trace.names[i];
      line += '=';
      line += row[i].has_value() ? show(*row[i]) : "#";
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string show_natural(const Value& v) { return v.as<Natural>().get_str(); }

std::string show_real(const Value& v) {
  // Shortest decimal form that parses back to the same double.
  char buffer[64];
  auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), v.as<double>());
  if (ec != std::errc{}) {
    throw ContractViolation("could not format a real value");
  }
  return std::string(buffer, end);
}

void TraceRecorder::on_input(const Vertex& input) {
  order_.push_back(input);
  retired_.push_back(false);
  trace_.names.push_back("x");
}

void TraceRecorder::on_operation(const TapeEntry& entry) {
  order_.push_back(entry.u);
  retired_.push_back(false);
  trace_.names.push_back("u" + std::to_string(trace_.names.size()));
}

void TraceRecorder::on_seed(const Vertex&) { snapshot(); }

void TraceRecorder::on_retire(const TapeEntry& entry) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i].same_record(entry.u)) {
      retired_[i] = true;
      snapshot();
      return;
    }
  }
  throw ContractViolation("retired a vertex the trace never saw");
}

void TraceRecorder::snapshot() {
  std::vector<std::optional<Value>> row;
  row.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (retired_[i]) {
      row.emplace_back(std::nullopt);
    } else {
      row.emplace_back(order_[i].adjoint());
    }
  }
  trace_.snapshots.push_back(std::move(row));
}

}  // namespace tad::ad
