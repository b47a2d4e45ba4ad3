#pragma once

#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

// Parsed loop file before Latin-square validation, so that well-formedness
// and algebraic verdicts can be reported separately.
struct LoopFileData {
  std::string name;
  std::vector<std::vector<Idx>> table;
  std::vector<std::string> labels;
};

// JSON form: {"name": str, "order": n, "table": [[int,...],...],
// "labels": [str,...]?}. Table entries are element indices with the
// identity at index 0.
std::string loop_to_json_text(const FiniteLoop& loop);
LoopFileData loop_data_from_json_text(const std::string& text);
FiniteLoop loop_from_json_text(const std::string& text);

// TSV form: n lines of n tab-separated indices, identity at index 0.
std::string loop_to_tsv_text(const FiniteLoop& loop);
LoopFileData loop_data_from_tsv_text(const std::string& text,
                                     std::string name = {});
FiniteLoop loop_from_tsv_text(const std::string& text, std::string name = {});

FiniteLoop loop_from_data(const LoopFileData& data);

// Paths ending in ".tsv" use the TSV form, everything else JSON. The path
// "-" reads standard input (JSON form) or writes standard output.
void write_loop_file(const FiniteLoop& loop, const std::string& path);
LoopFileData read_loop_file_data(const std::string& path);
FiniteLoop read_loop_file(const std::string& path);

}  // namespace moufang
