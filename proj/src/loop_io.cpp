#include "moufang/loop_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "moufang/errors.hpp"

namespace moufang {
namespace {

void check_declared_order(std::size_t n) {
  if (n < 1) fail(ErrorCode::IoError, "loop order must be at least 1");
  if (n > kMaxTableOrder)
    fail(ErrorCode::TableTooLarge,
         "declared order " + std::to_string(n) + " exceeds the table cap " +
             std::to_string(kMaxTableOrder));
}

std::string stem_of(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base =
      slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

bool has_tsv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0;
}

}  // namespace

std::string loop_to_json_text(const FiniteLoop& loop) {
  nlohmann::ordered_json doc;
  doc["name"] = loop.name();
  doc["order"] = loop.order();
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (Idx x = 0; x < loop.order(); ++x) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    const Idx* r = loop.row(x);
    for (Idx y = 0; y < loop.order(); ++y) row.push_back(r[y]);
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  if (!loop.labels().empty()) doc["labels"] = loop.labels();
  return doc.dump() + "\n";
}

LoopFileData loop_data_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::IoError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::IoError, "top level is not an object");
  if (!doc.contains("order") || !doc["order"].is_number_integer())
    fail(ErrorCode::IoError, "missing integer field \"order\"");
  if (!doc.contains("table") || !doc["table"].is_array())
    fail(ErrorCode::IoError, "missing array field \"table\"");
  const std::int64_t declared = doc["order"].get<std::int64_t>();
  if (declared < 1) fail(ErrorCode::IoError, "order must be at least 1");
  check_declared_order(static_cast<std::size_t>(declared));

  LoopFileData data;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      fail(ErrorCode::IoError, "field \"name\" is not a string");
    data.name = doc["name"].get<std::string>();
  }
  const auto& table = doc["table"];
  if (static_cast<std::int64_t>(table.size()) != declared)
    fail(ErrorCode::IoError, "table has " + std::to_string(table.size()) +
                                 " rows, declared order is " +
                                 std::to_string(declared));
  data.table.reserve(table.size());
  for (const auto& row : table) {
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != declared)
      fail(ErrorCode::IoError, "table row is not an array of length " +
                                   std::to_string(declared));
    std::vector<Idx> out;
    out.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_number_integer())
        fail(ErrorCode::IoError, "table entry is not an integer");
      out.push_back(cell.get<Idx>());
    }
    data.table.push_back(std::move(out));
  }
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() ||
        static_cast<std::int64_t>(labels.size()) != declared)
      fail(ErrorCode::IoError,
           "field \"labels\" is not an array of length " +
               std::to_string(declared));
    for (const auto& label : labels) {
      if (!label.is_string())
        fail(ErrorCode::IoError, "label is not a string");
      data.labels.push_back(label.get<std::string>());
    }
  }
  return data;
}

FiniteLoop loop_from_json_text(const std::string& text) {
  return loop_from_data(loop_data_from_json_text(text));
}

std::string loop_to_tsv_text(const FiniteLoop& loop) {
  std::string out;
  for (Idx x = 0; x < loop.order(); ++x) {
    const Idx* r = loop.row(x);
    for (Idx y = 0; y < loop.order(); ++y) {
      if (y) out += '\t';
      out += std::to_string(r[y]);
    }
    out += '\n';
  }
  return out;
}

LoopFileData loop_data_from_tsv_text(const std::string& text,
                                     std::string name) {
  LoopFileData data;
  data.name = std::move(name);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Idx> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '\t')) {
      try {
        std::size_t used = 0;
        long value = std::stol(cell, &used);
        if (used != cell.size())
          fail(ErrorCode::IoError, "bad integer cell \"" + cell + "\"");
        row.push_back(static_cast<Idx>(value));
      } catch (const std::logic_error&) {
        fail(ErrorCode::IoError, "bad integer cell \"" + cell + "\"");
      }
    }
    data.table.push_back(std::move(row));
  }
  if (data.table.empty()) fail(ErrorCode::IoError, "empty table");
  check_declared_order(data.table.size());
  const std::size_t n = data.table.size();
  for (const auto& row : data.table)
    if (row.size() != n)
      fail(ErrorCode::IoError,
           "square table expected, got a row of length " +
               std::to_string(row.size()) + " in a table of " +
               std::to_string(n) + " rows");
  return data;
}

FiniteLoop loop_from_tsv_text(const std::string& text, std::string name) {
  return loop_from_data(loop_data_from_tsv_text(text, std::move(name)));
}

FiniteLoop loop_from_data(const LoopFileData& data) {
  return FiniteLoop::from_cayley_table(data.table, data.name, data.labels);
}

void write_loop_file(const FiniteLoop& loop, const std::string& path) {
  const std::string text =
      has_tsv_extension(path) ? loop_to_tsv_text(loop) : loop_to_json_text(loop);
  if (path == "-") {
    std::cout << text;
    if (!std::cout) fail(ErrorCode::IoError, "cannot write standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
}

LoopFileData read_loop_file_data(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (has_tsv_extension(path))
    return loop_data_from_tsv_text(text, stem_of(path));
  return loop_data_from_json_text(text);
}

FiniteLoop read_loop_file(const std::string& path) {
  return loop_from_data(read_loop_file_data(path));
}

}  // namespace moufang
