#include "emovae/corpus/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <unordered_set>

#include "emovae/error.hpp"

namespace emovae {

namespace {

constexpr std::string_view kHeader =
    "id,audio_path,session,speaker,dialogue_kind,label,arousal,power,valence";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

double parse_double_field(const std::string& field, const char* what,
                          std::size_t line_no) {
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("manifest line " + std::to_string(line_no) + ": bad " +
                     what + " value '" + field + "'");
  }
  return value;
}

}  // namespace

std::string to_string(DialogueKind kind) {
  return kind == DialogueKind::improvised ? "improvised" : "scripted";
}

std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("manifest: cannot open: " + path.string());

  const std::filesystem::path base = path.parent_path();
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(f, line)) throw ParseError("manifest: empty file " + path.string());
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    throw ParseError("manifest line 1: header must be exactly '" +
                     std::string(kHeader) + "'");
  }

  std::vector<UtteranceRecord> records;
  std::unordered_set<std::string> seen_ids;
  while (std::getline(f, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 9) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    }
    UtteranceRecord rec;
    rec.id = fields[0];
    if (rec.id.empty()) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": empty id");
    }
    if (!seen_ids.insert(rec.id).second) {
      throw ValidationError("manifest line " + std::to_string(line_no) +
                            ": duplicate id '" + rec.id + "'");
    }
    std::filesystem::path audio(fields[1]);
    rec.audio_path = audio.is_absolute() ? audio : base / audio;

    const double session = parse_double_field(fields[2], "session", line_no);
    if (session < 1 || session != static_cast<int>(session)) {
      throw ParseError("manifest line " + std::to_string(line_no) +
                       ": session must be a positive integer");
    }
    rec.session = static_cast<int>(session);
    rec.speaker = fields[3];
    const std::string kind = lower(fields[4]);
    if (kind == "improvised") {
      rec.dialogue_kind = DialogueKind::improvised;
    } else if (kind == "scripted") {
      rec.dialogue_kind = DialogueKind::scripted;
    } else {
      throw ParseError("manifest line " + std::to_string(line_no) +
                       ": dialogue_kind must be improvised or scripted");
    }
    rec.categorical_raw = fields[5];
    rec.arousal = parse_double_field(fields[6], "arousal", line_no);
    rec.power = parse_double_field(fields[7], "power", line_no);
    rec.valence = parse_double_field(fields[8], "valence", line_no);
    const std::pair<const char*, double> dims[] = {
        {"arousal", rec.arousal}, {"power", rec.power}, {"valence", rec.valence}};
    for (const auto& [name, v] : dims) {
      if (v < 1.0 || v > 5.0) {
        throw ValidationError("manifest line " + std::to_string(line_no) + ": " +
                              name + " value outside [1,5]");
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

const std::array<std::string_view, LabelMap::kNumClasses> LabelMap::kClassNames =
    {"neutral", "happiness", "sadness", "anger"};

std::optional<std::size_t> LabelMap::map(std::string_view raw) const {
  const std::string l = lower(raw);
  if (l == "neutral") return neutral();
  if (l == "happiness" || l == "happy" || l == "excited") return happiness();
  if (l == "sadness" || l == "sad") return sadness();
  if (l == "anger" || l == "angry") return anger();
  return std::nullopt;  // excluded, not an error
}

std::optional<std::size_t> map_categorical(std::string_view raw,
                                           const LabelMap& lm) {
  return lm.map(raw);
}

std::string to_string(DimensionalBin bin) {
  switch (bin) {
    case DimensionalBin::low: return "low";
    case DimensionalBin::mid: return "mid";
    case DimensionalBin::high: return "high";
  }
  throw ParameterError("unknown bin");
}

DimensionalBin bin_dimensional(double value) {
  if (value < 1.0 || value > 5.0) {
    throw ValidationError("dimensional value " + std::to_string(value) +
                          " outside [1,5]");
  }
  if (value < 3.0) return DimensionalBin::low;
  if (value == 3.0) return DimensionalBin::mid;
  return DimensionalBin::high;
}

}  // namespace emovae
