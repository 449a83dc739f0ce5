// Copyright 2026 The Curator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curator/label.hpp"

namespace curator {

// One text sample. `label` is set iff the record came from a labeled split.
struct Record {
  std::string id;
  std::string text;
  std::string language;
  std::optional<Label> label;

  bool operator==(const Record&) const = default;
};

struct Dataset {
  std::vector<Record> records;
  // Source descriptors (file paths, "<filter ...>" notes). Not compared.
  std::vector<std::string> provenance;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  bool operator==(const Dataset& other) const { return records == other.records; }
};

// Unlabeled sample carrying the averaged score of several models and the
// standard deviation of those scores.
struct SemiSupRecord {
  std::string id;
  std::string text;
  double avg_score = 0.0;
  double std = 0.0;

  bool operator==(const SemiSupRecord&) const = default;
};

struct Prediction {
  std::string id;
  Label label = Label::kNot;

  bool operator==(const Prediction&) const = default;
};

// One model's predictions, in file order.
struct PredictionSet {
  std::string model_id;
  std::vector<Prediction> predictions;

  std::size_t size() const { return predictions.size(); }
  bool operator==(const PredictionSet&) const = default;
};

using LabelMap = std::unordered_map<std::string, Label>;

// Tabs, CR and LF become single spaces; TSV fields stay on one line.
std::string sanitize_field(std::string_view text);

// Splits one line on '\t'. Views point into `line`.
std::vector<std::string_view> split_tabs(std::string_view line);

// OLID-style TSV: id \t text [\t label]. A first line whose first field is
// "id" is a header and skipped; blank lines are skipped. Every data line must
// have the same field count (2 or 3). `language` is stamped on each record.
Dataset read_olid_tsv(const std::filesystem::path& path, std::string_view language = {});
Dataset parse_olid_tsv(std::istream& in, std::string_view source, std::string_view language = {});

// Writes a header and one line per record. Throws ValidationError if the
// dataset mixes labeled and unlabeled records.
void write_dataset_tsv(const Dataset& ds, const std::filesystem::path& path);
void write_dataset_tsv(const Dataset& ds, std::ostream& out);

// Incremental writer used by streaming filters.
class DatasetTsvWriter {
 public:
  DatasetTsvWriter(const std::filesystem::path& path, bool labeled);
  DatasetTsvWriter(std::ostream& out, bool labeled);

  void write(const Record& r);
  void close();
  std::size_t count() const { return count_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  bool labeled_;
  std::size_t count_ = 0;
  std::string path_;
};

// Semi-supervised TSV: id \t text \t avg_score \t std. Reads one line at a
// time; memory use does not grow with the file.
class SemiSupReader {
 public:
  explicit SemiSupReader(const std::filesystem::path& path);
  SemiSupReader(std::istream& in, std::string source);

  // Returns false at end of input.
  bool next(SemiSupRecord& out);
  std::size_t line_number() const { return line_no_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
  std::string source_;
  std::string line_;
  std::size_t line_no_ = 0;
};

std::vector<SemiSupRecord> read_semisup_tsv(const std::filesystem::path& path);
void write_semisup_tsv(std::span<const SemiSupRecord> records, const std::filesystem::path& path);
void write_semisup_tsv(std::span<const SemiSupRecord> records, std::ostream& out);

// Predictions TSV: id \t label, optional "id" header. `model_id` defaults to
// the file stem.
PredictionSet read_predictions_tsv(const std::filesystem::path& path,
                                   std::optional<std::string> model_id = std::nullopt);
PredictionSet parse_predictions_tsv(std::istream& in, std::string_view source, std::string model_id);
void write_predictions_tsv(const PredictionSet& set, const std::filesystem::path& path);
void write_predictions_tsv(const PredictionSet& set, std::ostream& out);

// Reads id -> label from either a predictions file (2 fields) or a labeled
// OLID file (3 fields).
LabelMap read_label_map(const std::filesystem::path& path);
LabelMap to_label_map(const PredictionSet& set);

// Strict numeric field parsing shared by the TSV readers.
double parse_double_field(std::string_view field, std::string_view what, std::string_view where);

// Shortest decimal text that parses back to the same double.
std::string format_double_exact(double v);

std::unique_ptr<std::ifstream> open_input(const std::filesystem::path& path, bool binary = false);
std::unique_ptr<std::ofstream> open_output(const std::filesystem::path& path, bool binary = false);

}  // namespace curator
