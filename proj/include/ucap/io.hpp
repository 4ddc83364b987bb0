#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ucap/evaluation.hpp"
#include "ucap/model.hpp"
#include "ucap/seeding.hpp"
#include "ucap/solvers.hpp"

namespace ucap {

// Instance files are sectioned plain text ([penalties] / [courses] /
// [faculty]); see README for the field reference. Parse errors carry
// "<source>:<line>:" locations, validation errors name the violated
// invariant.
Instance parse_instance(std::istream& in, std::string_view source_name);
Instance load_instance(const std::filesystem::path& path);
std::string serialize_instance(const Instance& instance);
void write_instance(const std::filesystem::path& path,
                    const Instance& instance);

// Solution files are one element per row, `section_id|kind|faculty_id`.
// Parsing checks references and kind tags but not staffing structure, so a
// corrupted file can still be loaded and its violations reported.
Solution parse_solution(std::istream& in, std::string_view source_name,
                        const Instance& instance);
Solution load_solution(const std::filesystem::path& path,
                       const Instance& instance);
std::string serialize_solution(const Instance& instance,
                               const Solution& solution);
void write_solution(const std::filesystem::path& path,
                    const Instance& instance, const Solution& solution);

// Trace files are CSV: elapsed_seconds,best_score,phase,iteration.
std::string serialize_trace(std::span<const TracePoint> trace);
void write_trace(const std::filesystem::path& path,
                 std::span<const TracePoint> trace);
std::vector<TracePoint> load_trace(const std::filesystem::path& path);

// Generator spec files are a [generator] section of key = value lines.
GeneratorSpec parse_generator_spec(std::istream& in,
                                   std::string_view source_name);
GeneratorSpec load_generator_spec(const std::filesystem::path& path);

// Run summary (final score, violation breakdown, per-faculty penalties, wall
// time, termination cause) as JSON.
std::string summary_json(const Instance& instance, std::string_view algorithm,
                         RngSeed seed, const SolveResult& result,
                         double wall_seconds);
void write_summary(const std::filesystem::path& path, const Instance& instance,
                   std::string_view algorithm, RngSeed seed,
                   const SolveResult& result, double wall_seconds);

}  // namespace ucap
