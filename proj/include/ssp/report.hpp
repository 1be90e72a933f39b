#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ssp/bounds.hpp"
#include "ssp/extremal.hpp"
#include "ssp/identities.hpp"
#include "ssp/scanner.hpp"
#include "ssp/schemes.hpp"
#include "ssp/theorems.hpp"

namespace ssp {

// All machine output uses ordered JSON and decimal strings for big integers.
using Json = nlohmann::ordered_json;

std::string int_str(const Int& x);
std::string rat_str(const Rat& x);

Json matrix_json(const EigenMatrix& P);
Json column_json(const std::vector<Int>& values);
Json analysis_json(const ColumnAnalysis& a, const ExtremalPrediction& pred);
Json verification_json(const VerificationReport& r);
Json bound_json(const BoundReport& r);
Json scan_json(const CoincidenceScan& s);
Json zeros_json(const ZeroScan& z);
Json identities_json(const std::vector<IdentityResult>& rs);
Json catalog_json();

std::string pretty_matrix(const EigenMatrix& P);
std::string pretty_column(const std::vector<Int>& values);
std::string pretty_analysis(const ColumnAnalysis& a, const ExtremalPrediction& pred);
std::string pretty_verification(const VerificationReport& r);
std::string pretty_bound(const BoundReport& r);
std::string pretty_scan(const CoincidenceScan& s);
std::string pretty_zeros(const ZeroScan& z);
std::string pretty_identities(const std::vector<IdentityResult>& rs);
std::string pretty_catalog();

// CSV: header row, one record per entry, LF endings.
std::string csv_escape(const std::string& s);
std::string csv_matrix(const EigenMatrix& P);
std::string csv_column(const std::vector<Int>& values);
std::string csv_analysis(const ColumnAnalysis& a, const ExtremalPrediction& pred);
std::string csv_verification(const VerificationReport& r);
std::string csv_bound(const BoundReport& r);
std::string csv_scan(const CoincidenceScan& s);
std::string csv_zeros(const ZeroScan& z);
std::string csv_identities(const std::vector<IdentityResult>& rs);
std::string csv_catalog();

std::string sign_string(const std::vector<int>& signs);  // "+", "0", "-" per row

}  // namespace ssp
