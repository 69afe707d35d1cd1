#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "bnc/pipeline.hpp"

namespace fs = std::filesystem;

namespace bnc {

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw PipelineError(ErrorCategory::kIo,
                        "cannot write report file: " + path.string());
  out << text;
  if (!out)
    throw PipelineError(ErrorCategory::kIo,
                        "failed writing report file: " + path.string());
}

std::string cell_triplet(const ReportCell& cell) {
  return format_pvalue(cell.not_equal.p_value) + " | " +
         format_pvalue(cell.greater.p_value) + " | " +
         format_pvalue(cell.less.p_value);
}

// Cells of one family indexed by (source corpus, target corpus). Length
// families carry each unordered pair once, under (i, j) with i before j in
// corpus order.
using CellGrid = std::map<std::pair<std::string, std::string>,
                          const ReportCell*>;

std::string render_markdown(const FeatureFamily& family, const CellGrid& grid,
                            const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  const std::size_t row_count = family.is_length ? n - 1 : n;
  const std::size_t col_begin = family.is_length ? 1 : 0;

  std::string out = "# ";
  out += family.display_name;
  out += "\n\np-values of the two-sample tests (alternatives: != , > , <).\n\n";

  out += "| corpus |";
  for (std::size_t j = col_begin; j < n; ++j)
    out += " " + names[j] + " != | " + names[j] + " > | " + names[j] + " < |";
  out += "\n|---|";
  for (std::size_t j = col_begin; j < n; ++j) out += "---|---|---|";
  out += "\n";

  for (std::size_t i = 0; i < row_count; ++i) {
    out += "| " + names[i] + " |";
    for (std::size_t j = col_begin; j < n; ++j) {
      auto it = grid.find({names[i], names[j]});
      if (it == grid.end())
        out += " - | - | - |";
      else
        out += " " + cell_triplet(*it->second) + " |";
    }
    out += "\n";
  }
  return out;
}

std::string render_csv(const FeatureFamily& family, const CellGrid& grid,
                       const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  const std::size_t row_count = family.is_length ? n - 1 : n;
  const std::size_t col_begin = family.is_length ? 1 : 0;

  std::string out = "corpus";
  for (std::size_t j = col_begin; j < n; ++j)
    out += "," + names[j] + ":ne," + names[j] + ":gt," + names[j] + ":lt";
  out += "\n";
  for (std::size_t i = 0; i < row_count; ++i) {
    out += names[i];
    for (std::size_t j = col_begin; j < n; ++j) {
      auto it = grid.find({names[i], names[j]});
      if (it == grid.end()) {
        out += ",-,-,-";
      } else {
        const ReportCell& cell = *it->second;
        out += "," + format_pvalue(cell.not_equal.p_value) + "," +
               format_pvalue(cell.greater.p_value) + "," +
               format_pvalue(cell.less.p_value);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string format_pvalue(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", p);
  return buf;
}

void render_report(const std::vector<ReportCell>& cells,
                   const std::vector<CorpusProfile>& profiles,
                   const RunConfig& cfg, std::ostream& warnings) {
  if (cells.empty())
    throw PipelineError(ErrorCategory::kData, "no report cells to render");

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec)
    throw PipelineError(ErrorCategory::kIo,
                        "cannot create output directory: " + cfg.output_dir);
  const fs::path outdir(cfg.output_dir);

  std::vector<std::string> names;
  names.reserve(profiles.size());
  for (const auto& profile : profiles) names.push_back(profile.corpus_name);

  // Per-family grid tables.
  for (const auto& family : feature_families()) {
    CellGrid grid;
    for (const auto& cell : cells)
      if (cell.family == family.id)
        grid.emplace(std::make_pair(cell.corpus_a, cell.corpus_b), &cell);
    if (grid.empty()) {
      warnings << "warning: feature family " << family.id
               << " produced no cells; table omitted\n";
      continue;
    }
    write_text(outdir / ("report_" + std::string(family.id) + ".md"),
               render_markdown(family, grid, names));
    write_text(outdir / ("report_" + std::string(family.id) + ".csv"),
               render_csv(family, grid, names));
  }

  // Flat cell listing.
  {
    std::string out =
        "family,corpus_a,corpus_b,d_ne,p_ne,d_gt,p_gt,d_lt,p_lt,"
        "sig_ne,sig_gt,sig_lt\n";
    char buf[64];
    for (const auto& cell : cells) {
      out += cell.family + "," + cell.corpus_a + "," + cell.corpus_b;
      for (const KsOutcome* o :
           {&cell.not_equal, &cell.greater, &cell.less}) {
        std::snprintf(buf, sizeof buf, ",%.6f,%s", o->statistic,
                      format_pvalue(o->p_value).c_str());
        out += buf;
      }
      out += std::string(",") + (cell.significant_not_equal ? "1" : "0") +
             "," + (cell.significant_greater ? "1" : "0") + "," +
             (cell.significant_less ? "1" : "0") + "\n";
    }
    write_text(outdir / "cells.csv", out);
  }

  // Summary of significant results plus corpus sizes.
  {
    std::string out = "# Summary\n\n";
    out += "Corpora:\n\n";
    for (const auto& profile : profiles) {
      out += "- " + profile.corpus_name + ": " +
             std::to_string(profile.stats.word_token_count) +
             " word tokens in " +
             std::to_string(profile.stats.sentence_count) + " sentences (" +
             std::to_string(profile.stats.skipped_word_count) +
             " tokens skipped)\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", cfg.significance_level);
    out += "\nSignificant at alpha = ";
    out += buf;
    out += ":\n\n";
    bool any = false;
    for (const auto& cell : cells) {
      const std::pair<const char*, const KsOutcome*> alts[] = {
          {"!=", &cell.not_equal}, {">", &cell.greater}, {"<", &cell.less}};
      const bool sig[] = {cell.significant_not_equal,
                          cell.significant_greater, cell.significant_less};
      for (int a = 0; a < 3; ++a) {
        if (!sig[a]) continue;
        any = true;
        out += "- " + cell.family + ": " + cell.corpus_a + " vs " +
               cell.corpus_b + " [" + alts[a].first +
               "] p=" + format_pvalue(alts[a].second->p_value) + "\n";
      }
    }
    if (!any) out += "- none\n";
    write_text(outdir / "summary.md", out);
  }
}

}  // namespace bnc
