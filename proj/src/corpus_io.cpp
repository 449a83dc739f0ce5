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

#include "curator/corpus_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "curator/error.hpp"

namespace curator {

namespace {

std::string where_of(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

Label parse_label_field(std::string_view field, std::string_view where) {
  auto label = parse_label(field);
  if (!label) {
    throw FormatError(std::string(where) + ": invalid label '" + std::string(field) +
                      "' (expected OFF or NOT)");
  }
  return *label;
}

}  // namespace

std::string sanitize_field(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_double_field(std::string_view field, std::string_view what, std::string_view where) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw FormatError(std::string(where) + ": non-numeric " + std::string(what) + " '" +
                      std::string(field) + "'");
  }
  return value;
}

std::string format_double_exact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::unique_ptr<std::ifstream> open_input(const std::filesystem::path& path, bool binary) {
  auto mode = std::ios::in | (binary ? std::ios::binary : std::ios::openmode{});
  auto f = std::make_unique<std::ifstream>(path, mode);
  if (!*f) throw IoError("cannot open input file: " + path.string());
  return f;
}

std::unique_ptr<std::ofstream> open_output(const std::filesystem::path& path, bool binary) {
  auto mode = std::ios::out | std::ios::trunc | (binary ? std::ios::binary : std::ios::openmode{});
  auto f = std::make_unique<std::ofstream>(path, mode);
  if (!*f) throw IoError("cannot open output file: " + path.string());
  return f;
}

// ---------------------------------------------------------------------------
// OLID TSV

Dataset read_olid_tsv(const std::filesystem::path& path, std::string_view language) {
  auto in = open_input(path);
  Dataset ds = parse_olid_tsv(*in, path.string(), language);
  if (in->bad()) throw IoError("read failed: " + path.string());
  return ds;
}

Dataset parse_olid_tsv(std::istream& in, std::string_view source, std::string_view language) {
  Dataset ds;
  ds.provenance.emplace_back(source);
  std::unordered_map<std::string, std::size_t> seen;  // id -> line
  std::size_t expected_fields = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (first) {
      first = false;
      if (fields[0] == "id") {
        if (fields.size() == 2 || fields.size() == 3) expected_fields = fields.size();
        continue;
      }
    }
    const std::string where = where_of(source, line_no);
    if (fields.size() < 2 || fields.size() > 3 ||
        (expected_fields != 0 && fields.size() != expected_fields)) {
      throw FormatError(where + ": expected " +
                        (expected_fields ? std::to_string(expected_fields) : std::string("2 or 3")) +
                        " tab-separated fields, found " + std::to_string(fields.size()));
    }
    expected_fields = fields.size();
    if (fields[0].empty()) throw FormatError(where + ": empty id");

    Record r;
    r.id = std::string(fields[0]);
    r.text = std::string(fields[1]);
    r.language = std::string(language);
    if (fields.size() == 3) r.label = parse_label_field(fields[2], where);

    auto [it, inserted] = seen.emplace(r.id, line_no);
    if (!inserted) {
      throw ValidationError(std::string(source) + ": duplicate id '" + r.id + "' on lines " +
                            std::to_string(it->second) + " and " + std::to_string(line_no));
    }
    ds.records.push_back(std::move(r));
  }
  return ds;
}

void write_dataset_tsv(const Dataset& ds, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_dataset_tsv(ds, *out);
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

void write_dataset_tsv(const Dataset& ds, std::ostream& out) {
  std::size_t labeled = 0;
  for (const auto& r : ds.records) labeled += r.label.has_value();
  if (labeled != 0 && labeled != ds.size()) {
    throw ValidationError("dataset mixes labeled and unlabeled records (" + std::to_string(labeled) +
                          " of " + std::to_string(ds.size()) + " labeled)");
  }
  DatasetTsvWriter writer(out, labeled != 0);
  for (const auto& r : ds.records) writer.write(r);
  writer.close();
}

DatasetTsvWriter::DatasetTsvWriter(const std::filesystem::path& path, bool labeled)
    : file_(open_output(path)), out_(file_.get()), labeled_(labeled), path_(path.string()) {
  *out_ << (labeled_ ? "id\ttext\tlabel\n" : "id\ttext\n");
}

DatasetTsvWriter::DatasetTsvWriter(std::ostream& out, bool labeled)
    : out_(&out), labeled_(labeled), path_("<stream>") {
  *out_ << (labeled_ ? "id\ttext\tlabel\n" : "id\ttext\n");
}

void DatasetTsvWriter::write(const Record& r) {
  if (r.label.has_value() != labeled_) {
    throw ValidationError("record '" + r.id + "' label presence does not match the " +
                          (labeled_ ? "labeled" : "unlabeled") + " output " + path_);
  }
  *out_ << sanitize_field(r.id) << '\t' << sanitize_field(r.text);
  if (labeled_) *out_ << '\t' << label_name(*r.label);
  *out_ << '\n';
  ++count_;
}

void DatasetTsvWriter::close() {
  out_->flush();
  if (!*out_) throw IoError("write failed: " + path_);
  if (file_) file_->close();
}

// ---------------------------------------------------------------------------
// Semi-supervised TSV

SemiSupReader::SemiSupReader(const std::filesystem::path& path)
    : file_(open_input(path)), in_(file_.get()), source_(path.string()) {}

SemiSupReader::SemiSupReader(std::istream& in, std::string source)
    : in_(&in), source_(std::move(source)) {}

bool SemiSupReader::next(SemiSupRecord& out) {
  while (std::getline(*in_, line_)) {
    ++line_no_;
    strip_cr(line_);
    if (line_.empty()) continue;
    auto fields = split_tabs(line_);
    if (line_no_ == 1 && fields[0] == "id") continue;
    const std::string where = where_of(source_, line_no_);
    if (fields.size() != 4) {
      throw FormatError(where + ": expected 4 tab-separated fields, found " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw FormatError(where + ": empty id");
    double avg = parse_double_field(fields[2], "avg_score", where);
    double sd = parse_double_field(fields[3], "std", where);
    if (avg < 0.0 || avg > 1.0) {
      throw ValidationError(where + ": avg_score " + std::string(fields[2]) + " outside [0,1]");
    }
    if (sd < 0.0) throw ValidationError(where + ": negative std " + std::string(fields[3]));
    out.id.assign(fields[0]);
    out.text.assign(fields[1]);
    out.avg_score = avg;
    out.std = sd;
    return true;
  }
  if (in_->bad()) throw IoError("read failed: " + source_);
  return false;
}

std::vector<SemiSupRecord> read_semisup_tsv(const std::filesystem::path& path) {
  SemiSupReader reader(path);
  std::vector<SemiSupRecord> out;
  SemiSupRecord r;
  while (reader.next(r)) out.push_back(r);
  return out;
}

void write_semisup_tsv(std::span<const SemiSupRecord> records, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_semisup_tsv(records, *out);
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

void write_semisup_tsv(std::span<const SemiSupRecord> records, std::ostream& out) {
  out << "id\ttext\tavg_score\tstd\n";
  for (const auto& r : records) {
    out << sanitize_field(r.id) << '\t' << sanitize_field(r.text) << '\t'
        << format_double_exact(r.avg_score) << '\t' << format_double_exact(r.std) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Predictions TSV

PredictionSet read_predictions_tsv(const std::filesystem::path& path,
                                   std::optional<std::string> model_id) {
  auto in = open_input(path);
  return parse_predictions_tsv(*in, path.string(), model_id.value_or(path.stem().string()));
}

PredictionSet parse_predictions_tsv(std::istream& in, std::string_view source, std::string model_id) {
  PredictionSet set;
  set.model_id = std::move(model_id);
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (line_no == 1 && fields[0] == "id") continue;
    const std::string where = where_of(source, line_no);
    if (fields.size() != 2) {
      throw FormatError(where + ": expected 2 tab-separated fields, found " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw FormatError(where + ": empty id");
    Prediction p{std::string(fields[0]), parse_label_field(fields[1], where)};
    auto [it, inserted] = seen.emplace(p.id, line_no);
    if (!inserted) {
      throw ValidationError(std::string(source) + ": duplicate id '" + p.id + "' on lines " +
                            std::to_string(it->second) + " and " + std::to_string(line_no));
    }
    set.predictions.push_back(std::move(p));
  }
  if (in.bad()) throw IoError("read failed: " + std::string(source));
  return set;
}

void write_predictions_tsv(const PredictionSet& set, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_predictions_tsv(set, *out);
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

void write_predictions_tsv(const PredictionSet& set, std::ostream& out) {
  out << "id\tlabel\n";
  for (const auto& p : set.predictions) {
    out << sanitize_field(p.id) << '\t' << label_name(p.label) << '\n';
  }
}

LabelMap to_label_map(const PredictionSet& set) {
  LabelMap m;
  m.reserve(set.size());
  for (const auto& p : set.predictions) m.emplace(p.id, p.label);
  return m;
}

LabelMap read_label_map(const std::filesystem::path& path) {
  auto in = open_input(path);
  LabelMap m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (line_no == 1 && fields[0] == "id") continue;
    const std::string where = where_of(path.string(), line_no);
    if (fields.size() != 2 && fields.size() != 3) {
      throw FormatError(where + ": expected 2 or 3 tab-separated fields, found " +
                        std::to_string(fields.size()));
    }
    Label label = parse_label_field(fields.back(), where);
    if (!m.emplace(std::string(fields[0]), label).second) {
      throw ValidationError(where + ": duplicate id '" + std::string(fields[0]) + "'");
    }
  }
  return m;
}

}  // namespace curator
