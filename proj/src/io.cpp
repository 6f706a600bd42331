#include "hyrrt/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hyrrt {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json plan_to_json_value(const SolutionPair& plan) {
  ordered_json doc;
  doc["n"] = plan.state_dim();
  doc["m"] = plan.input_dim();
  ordered_json segments = ordered_json::array();
  for (int j = 0; j < plan.state.segment_count(); ++j) {
    ordered_json seg;
    seg["j"] = j;
    ordered_json samples = ordered_json::array();
    const auto& times = plan.state.segment(j).times;
    for (std::size_t i = 0; i < times.size(); ++i) {
      ordered_json row;
      row["t"] = times[i];
      row["x"] = std::vector<double>(plan.state.sample(j, i).begin(),
                                     plan.state.sample(j, i).end());
      row["u"] = std::vector<double>(plan.input.sample(j, i).begin(),
                                     plan.input.sample(j, i).end());
      samples.push_back(std::move(row));
    }
    seg["samples"] = std::move(samples);
    segments.push_back(std::move(seg));
  }
  doc["segments"] = std::move(segments);
  return doc;
}

}  // namespace

std::string plan_to_json(const SolutionPair& plan) {
  return plan_to_json_value(plan).dump(2) + "\n";
}

SolutionPair plan_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("plan JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const int m = doc.at("m").get<int>();
    std::vector<HybridArc::Segment> xs, us;
    int expect_j = 0;
    for (const auto& seg : doc.at("segments")) {
      if (seg.at("j").get<int>() != expect_j++) {
        throw Error(ErrorCode::Parse, "plan JSON: segment j indices must be 0,1,2,...");
      }
      HybridArc::Segment xseg, useg;
      for (const auto& row : seg.at("samples")) {
        const double t = row.at("t").get<double>();
        xseg.times.push_back(t);
        useg.times.push_back(t);
        const auto x = row.at("x").get<std::vector<double>>();
        const auto u = row.at("u").get<std::vector<double>>();
        if (static_cast<int>(x.size()) != n || static_cast<int>(u.size()) != m) {
          throw Error(ErrorCode::Parse, "plan JSON: sample width does not match n/m");
        }
        xseg.values.insert(xseg.values.end(), x.begin(), x.end());
        useg.values.insert(useg.values.end(), u.begin(), u.end());
      }
      xs.push_back(std::move(xseg));
      us.push_back(std::move(useg));
    }
    return SolutionPair(HybridArc(n, std::move(xs)), HybridArc(m, std::move(us)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("plan JSON: ") + e.what());
  }
}

namespace {

std::string plan_table(const SolutionPair& plan, bool segment_breaks) {
  std::ostringstream out;
  out << "t,j";
  for (int i = 0; i < plan.state_dim(); ++i) out << ",x_" << i;
  for (int i = 0; i < plan.input_dim(); ++i) out << ",u_" << i;
  out << "\n";
  for (int j = 0; j < plan.state.segment_count(); ++j) {
    if (segment_breaks && j > 0) out << "\n";
    const auto& times = plan.state.segment(j).times;
    for (std::size_t i = 0; i < times.size(); ++i) {
      out << format_double(times[i]) << ',' << j;
      for (double v : plan.state.sample(j, i)) out << ',' << format_double(v);
      for (double v : plan.input.sample(j, i)) out << ',' << format_double(v);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string plan_to_csv(const SolutionPair& plan) { return plan_table(plan, false); }

std::string plan_to_plot(const SolutionPair& plan) { return plan_table(plan, true); }

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open for writing: " + path);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SolutionPair load_plan_file(const std::string& path) {
  return plan_from_json(read_text_file(path));
}

void save_plan_file(const std::string& path, const SolutionPair& plan) {
  write_text_file(path, plan_to_json(plan));
}

}  // namespace hyrrt
