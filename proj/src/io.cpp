#include "ucap/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace ucap {
namespace {

std::string location(std::string_view source, int line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

[[noreturn]] void fail(std::string_view source, int line,
                       const std::string& message) {
  throw ParseError(location(source, line) + message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Whitespace-separated fields; double quotes group a field with spaces.
std::vector<std::string> tokenize(std::string_view source, int line_no,
                                  std::string_view line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    if (line[i] == '"') {
      const std::size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos)
        fail(source, line_no, "unterminated quote");
      fields.emplace_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end])))
        ++end;
      fields.emplace_back(line.substr(i, end - i));
      i = end;
    }
  }
  return fields;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view source, int line_no, std::string_view text,
              const char* what) {
  int value = 0;
  bool any = false;
  for (const char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(source, line_no, std::string("bad ") + what + " '" +
                                std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 100'000'000)
      fail(source, line_no, std::string(what) + " out of range");
    any = true;
  }
  if (!any) fail(source, line_no, std::string("missing ") + what);
  return value;
}

Fixed parse_fixed(std::string_view source, int line_no, std::string_view text,
                  const char* what) {
  try {
    return Fixed::parse(text);
  } catch (const std::invalid_argument& e) {
    fail(source, line_no, std::string("bad ") + what + ": " + e.what());
  }
}

double parse_double(std::string_view source, int line_no,
                    std::string_view text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(source, line_no,
         std::string("bad ") + what + " '" + std::string(text) + "'");
  }
}

std::int64_t parse_int64(std::string_view source, int line_no,
                         std::string_view text, const char* what) {
  std::int64_t value = 0;
  bool any = false;
  for (const char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(source, line_no,
           std::string("bad ") + what + " '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > (std::int64_t{1} << 60)) fail(source, line_no, std::string(what) + " out of range");
    any = true;
  }
  if (!any) fail(source, line_no, std::string("missing ") + what);
  return value;
}

struct KeyValue {
  std::string key;
  std::string value;
};

KeyValue parse_key_value(std::string_view source, int line_no,
                         std::string_view line) {
  const std::size_t eq = line.find('=');
  if (eq == std::string_view::npos)
    fail(source, line_no, "expected 'key = value'");
  return KeyValue{std::string(trim(line.substr(0, eq))),
                  std::string(trim(line.substr(eq + 1)))};
}

}  // namespace

Instance parse_instance(std::istream& in, std::string_view source) {
  enum class Block { None, Penalties, Courses, Faculty };
  Block block = Block::None;

  PenaltyConfig penalties;
  std::vector<CourseSection> sections;
  std::vector<Faculty> faculty;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[penalties]") block = Block::Penalties;
      else if (line == "[courses]") block = Block::Courses;
      else if (line == "[faculty]") block = Block::Faculty;
      else fail(source, line_no, "unknown section " + std::string(line));
      continue;
    }

    switch (block) {
      case Block::None:
        fail(source, line_no, "data before any [section] header");
      case Block::Penalties: {
        const KeyValue kv = parse_key_value(source, line_no, line);
        const Fixed value = parse_fixed(source, line_no, kv.value, kv.key.c_str());
        if (kv.key == "over_days") penalties.over_days = value;
        else if (kv.key == "over_slots_per_day") penalties.over_slots_per_day = value;
        else if (kv.key == "consecutive_four") penalties.consecutive_four = value;
        else if (kv.key == "idle_gap") penalties.idle_gap = value;
        else if (kv.key == "senior_lab") penalties.senior_lab = value;
        else if (kv.key == "senior_early") penalties.senior_early = value;
        else fail(source, line_no, "unknown penalty key '" + kv.key + "'");
        break;
      }
      case Block::Courses: {
        const std::vector<std::string> f = tokenize(source, line_no, line);
        if (f.size() != 6)
          fail(source, line_no,
               "expected 6 course fields (id code kind slots credits seats), "
               "got " + std::to_string(f.size()));
        CourseSection sec;
        sec.id = f[0];
        sec.code = f[1];
        if (f[2] == "T") sec.kind = SectionKind::Theory;
        else if (f[2] == "L") sec.kind = SectionKind::Lab;
        else fail(source, line_no, "kind must be T or L, got '" + f[2] + "'");
        for (const std::string& part : split(f[3], ',')) {
          const int v = parse_int(source, line_no, part, "slot");
          try {
            sec.slots.push_back(SlotIndex::from_value(v));
          } catch (const ValidationError& e) {
            fail(source, line_no, std::string("section ") + sec.id + ": " + e.what());
          }
        }
        sec.credits = parse_fixed(source, line_no, f[4], "credits");
        sec.required_seats = parse_int(source, line_no, f[5], "seat count");
        sections.push_back(std::move(sec));
        break;
      }
      case Block::Faculty: {
        const std::vector<std::string> f = tokenize(source, line_no, line);
        if (f.size() != 5)
          fail(source, line_no,
               "expected 5 faculty fields (id name max_credits senior codes), "
               "got " + std::to_string(f.size()));
        Faculty m;
        m.id = f[0];
        m.name = f[1];
        m.max_credits = parse_fixed(source, line_no, f[2], "max_credits");
        if (f[3] == "yes") m.is_senior = true;
        else if (f[3] == "no") m.is_senior = false;
        else fail(source, line_no, "senior must be yes or no, got '" + f[3] + "'");
        m.preferred_courses = split(f[4], ',');
        faculty.push_back(std::move(m));
        break;
      }
    }
  }

  return Instance::create(std::move(sections), std::move(faculty), penalties);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_instance(in, path.filename().string());
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  const PenaltyConfig& p = instance.penalties();
  out << "[penalties]\n";
  out << "over_days = " << p.over_days.str() << "\n";
  out << "over_slots_per_day = " << p.over_slots_per_day.str() << "\n";
  out << "consecutive_four = " << p.consecutive_four.str() << "\n";
  out << "idle_gap = " << p.idle_gap.str() << "\n";
  out << "senior_lab = " << p.senior_lab.str() << "\n";
  out << "senior_early = " << p.senior_early.str() << "\n";

  out << "\n[courses]\n";
  out << "# id code kind slots credits seats\n";
  for (const CourseSection& sec : instance.sections()) {
    out << sec.id << " " << sec.code << " "
        << (sec.kind == SectionKind::Lab ? "L" : "T") << " ";
    for (std::size_t i = 0; i < sec.slots.size(); ++i)
      out << (i ? "," : "") << sec.slots[i].value();
    out << " " << sec.credits.str() << " " << sec.required_seats << "\n";
  }

  out << "\n[faculty]\n";
  out << "# id name max_credits senior preferred_codes\n";
  for (const Faculty& m : instance.faculty()) {
    out << m.id << " \"" << m.name << "\" " << m.max_credits.str() << " "
        << (m.is_senior ? "yes" : "no") << " ";
    for (std::size_t i = 0; i < m.preferred_courses.size(); ++i)
      out << (i ? "," : "") << m.preferred_courses[i];
    out << "\n";
  }
  return out.str();
}

void write_instance(const std::filesystem::path& path,
                    const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << serialize_instance(instance);
}

Solution parse_solution(std::istream& in, std::string_view source,
                        const Instance& instance) {
  Solution solution;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> parts = split(line, '|');
    if (parts.size() != 3)
      fail(source, line_no, "expected section_id|kind|faculty_id");
    Assignment a;
    a.section = instance.find_section(trim(parts[0]));
    if (a.section < 0)
      fail(source, line_no, "unknown section id '" + parts[0] + "'");
    const std::string_view kind = trim(parts[1]);
    if (kind == "T") a.kind_tag = SectionKind::Theory;
    else if (kind == "L") a.kind_tag = SectionKind::Lab;
    else fail(source, line_no, "kind must be T or L");
    if (a.kind_tag != instance.section(a.section).kind)
      fail(source, line_no, "kind tag does not match section " +
                                instance.section(a.section).id);
    a.faculty = instance.find_faculty(trim(parts[2]));
    if (a.faculty < 0)
      fail(source, line_no, "unknown faculty id '" + parts[2] + "'");
    solution.elements.push_back(a);
  }
  return solution;
}

Solution load_solution(const std::filesystem::path& path,
                       const Instance& instance) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_solution(in, path.filename().string(), instance);
}

std::string serialize_solution(const Instance& instance,
                               const Solution& solution) {
  check_references(instance, solution);
  std::ostringstream out;
  for (const Assignment& a : solution.elements)
    out << instance.section(a.section).id << "|"
        << (a.kind_tag == SectionKind::Lab ? "L" : "T") << "|"
        << instance.faculty_member(a.faculty).id << "\n";
  return out.str();
}

void write_solution(const std::filesystem::path& path,
                    const Instance& instance, const Solution& solution) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << serialize_solution(instance, solution);
}

std::string serialize_trace(std::span<const TracePoint> trace) {
  std::ostringstream out;
  out << "elapsed_seconds,best_score,phase,iteration\n";
  char buf[96];
  for (const TracePoint& p : trace) {
    std::snprintf(buf, sizeof buf, "%.6f,%.9f,%s,%lld", p.elapsed_seconds,
                  p.best_score.value(), phase_name(p.phase),
                  static_cast<long long>(p.iteration));
    out << buf << "\n";
  }
  return out.str();
}

void write_trace(const std::filesystem::path& path,
                 std::span<const TracePoint> trace) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << serialize_trace(trace);
}

std::vector<TracePoint> load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  const std::string source = path.filename().string();
  std::vector<TracePoint> trace;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "elapsed_seconds,best_score,phase,iteration")
        fail(source, line_no, "bad trace header");
      continue;
    }
    const std::vector<std::string> parts = split(line, ',');
    if (parts.size() != 4) fail(source, line_no, "expected 4 columns");
    TracePoint p;
    p.elapsed_seconds = parse_double(source, line_no, parts[0], "elapsed");
    const double score = parse_double(source, line_no, parts[1], "score");
    // Round-tripped for plotting / checking only; exactness lives in the
    // library path.
    p.best_score =
        Score{static_cast<std::int64_t>(score * 1e9 + 0.5), 1'000'000'000};
    bool known = false;
    for (const Phase phase :
         {Phase::Lra, Phase::MgaCrossover, Phase::MgaMutation, Phase::Shc,
          Phase::Sa, Phase::Ts, Phase::Ga, Phase::Memetic}) {
      if (parts[2] == phase_name(phase)) {
        p.phase = phase;
        known = true;
        break;
      }
    }
    if (!known) fail(source, line_no, "unknown phase '" + parts[2] + "'");
    p.iteration = parse_int64(source, line_no, parts[3], "iteration");
    trace.push_back(p);
  }
  return trace;
}

GeneratorSpec parse_generator_spec(std::istream& in,
                                   std::string_view source) {
  GeneratorSpec spec;
  std::string raw;
  int line_no = 0;
  bool in_block = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[generator]") {
      in_block = true;
      continue;
    }
    if (line.front() == '[')
      fail(source, line_no, "unknown section " + std::string(line));
    if (!in_block) fail(source, line_no, "data before [generator] header");
    const KeyValue kv = parse_key_value(source, line_no, line);
    if (kv.key == "n_faculty")
      spec.n_faculty = parse_int(source, line_no, kv.value, "n_faculty");
    else if (kv.key == "n_theory_sections")
      spec.n_theory_sections =
          parse_int(source, line_no, kv.value, "n_theory_sections");
    else if (kv.key == "n_lab_sections")
      spec.n_lab_sections =
          parse_int(source, line_no, kv.value, "n_lab_sections");
    else if (kv.key == "preference_density")
      spec.preference_density =
          parse_double(source, line_no, kv.value, "preference_density");
    else if (kv.key == "credit_limit_min")
      spec.credit_limit_min =
          parse_fixed(source, line_no, kv.value, "credit_limit_min");
    else if (kv.key == "credit_limit_max")
      spec.credit_limit_max =
          parse_fixed(source, line_no, kv.value, "credit_limit_max");
    else if (kv.key == "two_meeting_fraction")
      spec.two_meeting_fraction =
          parse_double(source, line_no, kv.value, "two_meeting_fraction");
    else if (kv.key == "senior_fraction")
      spec.senior_fraction =
          parse_double(source, line_no, kv.value, "senior_fraction");
    else
      fail(source, line_no, "unknown generator key '" + kv.key + "'");
  }
  return spec;
}

GeneratorSpec load_generator_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_generator_spec(in, path.filename().string());
}

std::string summary_json(const Instance& instance, std::string_view algorithm,
                         RngSeed seed, const SolveResult& result,
                         double wall_seconds) {
  const Score score = result.best_report.score();
  nlohmann::json j;
  j["algorithm"] = std::string(algorithm);
  j["seed"] = seed.value;
  j["score"] = score.value();
  j["score_exact"] = {{"numer", score.numer}, {"denom", score.denom}};
  j["accuracy_percent"] = score.value() * 100.0;
  const HardViolations& hv = result.best_report.hcv;
  j["hard_violations"] = {{"theory_unstaffed", hv.theory_unstaffed},
                          {"lab_understaffed", hv.lab_understaffed},
                          {"slot_clash", hv.slot_clash},
                          {"credit_exceeded", hv.credit_exceeded},
                          {"off_preference", hv.off_preference},
                          {"total", hv.total()}};
  nlohmann::json per_faculty = nlohmann::json::array();
  for (const FacultyReport& fr : result.best_report.per_faculty) {
    per_faculty.push_back(
        {{"id", instance.faculty_member(fr.faculty).id},
         {"penalty_sum", fr.penalty_sum.value()},
         {"clamped_score", fr.clamped_score.value()}});
  }
  j["per_faculty"] = std::move(per_faculty);
  j["wall_time_seconds"] = wall_seconds;
  j["terminated_by"] = termination_name(result.terminated_by);
  j["trace_points"] = result.trace.size();
  j["instance"] = {{"sections", instance.n_sections()},
                   {"faculty", instance.n_faculty()},
                   {"elements", instance.n_elements()}};
  return j.dump(2) + "\n";
}

void write_summary(const std::filesystem::path& path, const Instance& instance,
                   std::string_view algorithm, RngSeed seed,
                   const SolveResult& result, double wall_seconds) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << summary_json(instance, algorithm, seed, result, wall_seconds);
}

}  // namespace ucap
