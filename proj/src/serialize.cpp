#include "critchar/serialize.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace critchar {

namespace {

using json = nlohmann::ordered_json;

std::string offset_brackets(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

json offset_json(const IntVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json meta_json(const CharacterMeta& meta, const char* kind) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = kind;
  j["system"] = meta.system;
  j["lambda"] = meta.lambda_bar;
  j["level"] = meta.level;
  j["formula"] = meta.formula;
  j["depth"] = meta.depth;
  if (meta.height_cutoff >= 0) j["height_cutoff"] = meta.height_cutoff;
  return j;
}

std::string meta_comment(const CharacterMeta& meta, const char* kind) {
  std::ostringstream os;
  os << "# " << kFormatTag << " " << kind << " system=" << meta.system
     << " lambda=[";
  for (size_t i = 0; i < meta.lambda_bar.size(); ++i) {
    if (i) os << ",";
    os << meta.lambda_bar[i];
  }
  os << "] level=" << meta.level << " formula=" << meta.formula
     << " depth=" << meta.depth;
  if (meta.height_cutoff >= 0) os << " height_cutoff=" << meta.height_cutoff;
  os << "\n";
  return os.str();
}

}  // namespace

std::string render_character(const AffineCharacter& c, const CharacterMeta& meta,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      std::ostringstream os;
      os << meta_comment(meta, "character");
      const QSeries q = qdims(c);
      os << "# qdims:";
      for (const Integer& v : q.coeffs) os << " " << v;
      os << "\n";
      for (int n = 0; n <= c.truncation(); ++n)
        for (const auto& [off, v] : c.slice(n).terms())
          os << "n=" << n << " offset=" << offset_brackets(off) << " mult=" << v
             << "\n";
      return os.str();
    }
    case OutputFormat::Records: {
      json j = meta_json(meta, "character");
      json records = json::array();
      for (int n = 0; n <= c.truncation(); ++n)
        for (const auto& [off, v] : c.slice(n).terms()) {
          json r;
          r["delta_degree"] = n;
          r["offset"] = offset_json(off);
          r["multiplicity"] = v.str();
          records.push_back(std::move(r));
        }
      j["records"] = std::move(records);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "delta_degree";
      for (int i = 0; i < c.rank(); ++i) os << ",offset_" << i + 1;
      os << ",multiplicity\n";
      for (int n = 0; n <= c.truncation(); ++n)
        for (const auto& [off, v] : c.slice(n).terms()) {
          os << n;
          for (Eigen::Index i = 0; i < off.size(); ++i) os << "," << off[i];
          os << "," << v << "\n";
        }
      return os.str();
    }
  }
  return {};
}

std::string render_qdims(const QSeries& s, const CharacterMeta& meta,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      std::ostringstream os;
      os << meta_comment(meta, "qdims");
      for (int n = 0; n <= s.truncation(); ++n)
        os << "n=" << n << " qdim=" << s.coeffs[n] << "\n";
      return os.str();
    }
    case OutputFormat::Records: {
      json j = meta_json(meta, "qdims");
      json records = json::array();
      for (int n = 0; n <= s.truncation(); ++n) {
        json r;
        r["delta_degree"] = n;
        r["multiplicity"] = s.coeffs[n].str();
        records.push_back(std::move(r));
      }
      j["records"] = std::move(records);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "delta_degree,multiplicity\n";
      for (int n = 0; n <= s.truncation(); ++n)
        os << n << "," << s.coeffs[n] << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_report(const VerificationReport& rep, OutputFormat format) {
  if (format == OutputFormat::Records) {
    json j;
    j["format"] = kFormatTag;
    j["kind"] = "verification";
    j["identity"] = rep.identity;
    j["system"] = rep.system;
    j["lambda"] = rep.lambda_bar;
    j["depth"] = rep.truncation;
    j["status"] = rep.exact_match ? "exact-match" : "mismatch";
    if (rep.first_discrepancy) {
      const Discrepancy& d = *rep.first_discrepancy;
      json dj;
      dj["slice"] = d.slice;
      dj["offset"] = offset_json(d.offset);
      dj["expected"] = d.expected.str();
      dj["actual"] = d.actual.str();
      j["first_discrepancy"] = std::move(dj);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << rep.identity << " system=" << rep.system << " lambda=[";
  for (size_t i = 0; i < rep.lambda_bar.size(); ++i) {
    if (i) os << ",";
    os << rep.lambda_bar[i];
  }
  os << "] depth=" << rep.truncation << ": ";
  if (rep.exact_match) {
    os << "exact-match\n";
  } else {
    os << "mismatch";
    if (rep.first_discrepancy) {
      const Discrepancy& d = *rep.first_discrepancy;
      os << " at (slice=" << d.slice << ", offset=" << offset_brackets(d.offset)
         << "): expected " << d.expected << " actual " << d.actual;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_gram_report(const GramReport& rep, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      std::ostringstream os;
      os << "# " << kFormatTag << " gram-report system=" << rep.system
         << " lambda=[";
      for (size_t i = 0; i < rep.lambda_bar.size(); ++i) {
        if (i) os << ",";
        os << rep.lambda_bar[i];
      }
      os << "] depth=" << rep.depth
         << (rep.complete ? "" : " (incomplete: bound reached)") << "\n";
      for (const GramEntry& e : rep.entries)
        os << "n=" << e.delta_degree << " offset=" << offset_brackets(e.offset)
           << " dim=" << e.dim_weyl << " rank=" << e.rank << "\n";
      return os.str();
    }
    case OutputFormat::Records: {
      json j;
      j["format"] = kFormatTag;
      j["kind"] = "gram-report";
      j["system"] = rep.system;
      j["lambda"] = rep.lambda_bar;
      j["depth"] = rep.depth;
      j["complete"] = rep.complete;
      json records = json::array();
      for (const GramEntry& e : rep.entries) {
        json r;
        r["delta_degree"] = e.delta_degree;
        r["offset"] = offset_json(e.offset);
        r["dim"] = e.dim_weyl;
        r["rank"] = e.rank;
        records.push_back(std::move(r));
      }
      j["records"] = std::move(records);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      const int rank_cols =
          rep.entries.empty() ? 0 : static_cast<int>(rep.entries[0].offset.size());
      os << "delta_degree";
      for (int i = 0; i < rank_cols; ++i) os << ",offset_" << i + 1;
      os << ",dim,rank\n";
      for (const GramEntry& e : rep.entries) {
        os << e.delta_degree;
        for (Eigen::Index i = 0; i < e.offset.size(); ++i) os << "," << e.offset[i];
        os << "," << e.dim_weyl << "," << e.rank << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_gram_matrices(const WeylModuleOracle& oracle, int depth) {
  std::ostringstream os;
  const int computed = std::min(depth, oracle.depth_limit());
  for (int n = 0; n <= computed; ++n) {
    for (const auto& [beta, basis] : oracle.slice_bases(n)) {
      const RatMat gram = oracle.gram_matrix(basis);
      os << "gram n=" << n << " offset=" << offset_brackets(beta)
         << " dim=" << gram.rows() << "\n";
      for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
          if (j) os << " ";
          os << gram(i, j);
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

VerificationReport compare_with_records_file(const AffineCharacter& c,
                                             const std::string& path) {
  VerificationReport rep;
  rep.identity = "expect";
  rep.truncation = c.truncation();
  rep.exact_match = true;

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture file: " + path);
  json j = json::parse(in);
  AffineCharacter expected(c.type(), c.rank(), c.base_weight(), c.truncation());
  for (const auto& r : j.at("records")) {
    const int n = r.at("delta_degree").get<int>();
    if (n < 0 || n > c.truncation()) continue;
    IntVec off(c.rank());
    const auto& arr = r.at("offset");
    for (int i = 0; i < c.rank(); ++i) off[i] = arr.at(i).get<int>();
    expected.slice(n).add(off, Integer(r.at("multiplicity").get<std::string>()));
  }
  for (int n = 0; n <= c.truncation() && rep.exact_match; ++n) {
    std::map<IntVec, std::pair<Integer, Integer>, HeightLexLess> merged;
    for (const auto& [off, v] : expected.slice(n).terms()) merged[off].first = v;
    for (const auto& [off, v] : c.slice(n).terms()) merged[off].second = v;
    for (const auto& [off, pair] : merged) {
      if (pair.first != pair.second) {
        rep.exact_match = false;
        Discrepancy d;
        d.slice = n;
        d.offset = off;
        d.expected = pair.first;
        d.actual = pair.second;
        rep.first_discrepancy = std::move(d);
        break;
      }
    }
  }
  return rep;
}

}  // namespace critchar
