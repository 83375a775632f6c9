#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegact::cli {

struct Global {
    bool json = false;
    bool cross_check = false;
    std::size_t truncate = 8;
    std::string out;
};

// Raised for invalid command-line usage (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OmegaArgs {
    std::string mode;  // ct or geq
    std::string expr;
    std::string system_file;
    bool strict = false;
    std::vector<std::string> vars, eliminate, elim_order;
    std::string rho;
};

struct CountArgs {
    std::string system_file;
    std::vector<std::string> elim_order;
};

struct PfdArgs {
    std::string expr;
    std::string var = "t";
    bool at_origin = false;
    std::string prime;
};

struct DedekindArgs {
    std::vector<long> values;
    bool reciprocity = false;
};

struct WalksArgs {
    std::string kind;
    std::string gamma;
    long m = 2;
    int p = 1;
    bool csv = false;
};

struct HadamardArgs {
    std::string f, g;
    std::string var = "t";
};

// solve FILE | walks | dedekind N A... | dyson A... | binomial [ID]
struct OracleArgs {
    std::string kind;
    std::vector<std::string> args;
    bool strict = false;
    std::string steps = "1,0;-1,0;0,1;0,-1";
    std::string constraint = "none";  // none, slit, diagonal, band:LO:HI, quarter
    std::string start = "0,0";
    long bound = 8;
};

// Each returns the process exit code; output goes to os.
int run_omega(const OmegaArgs& a, const Global& g, std::ostream& os);
int run_count(const CountArgs& a, const Global& g, std::ostream& os);
int run_pfd(const PfdArgs& a, const Global& g, std::ostream& os);
int run_dedekind(const DedekindArgs& a, const Global& g, std::ostream& os);
int run_walks(const WalksArgs& a, const Global& g, std::ostream& os);
int run_hadamard(const HadamardArgs& a, const Global& g, std::ostream& os);
int run_oracle(const OracleArgs& a, const Global& g, std::ostream& os);

}  // namespace omegact::cli
