#pragma once

#include "aitbench/complexity.hpp"
#include "aitbench/enumeration.hpp"
#include "aitbench/profile.hpp"
#include "aitbench/table_store.hpp"

#include <optional>
#include <vector>

namespace aitbench {

// Finite sets are printed as length_header(|S|) followed by the elements in
// length-lex order, each as length_header(|e|) e.
BitString encode_set(std::vector<BitString> elements);
// nullopt unless code is exactly one canonical encoding.
std::optional<std::vector<BitString>> decode_set(const BitString& code);

// Tag in front of every two-part description; it tells the framework
// interpreter to read a model program and then an index.
inline const BitString kModelTag("111");

struct Model {
  std::vector<BitString> elements;  // length-lex
  BitString encoding;
  BitString program;                // shortest known producer of the encoding
  std::size_t k = 0;                // K(S | z), upper bound when not in table
  std::size_t log_card = 0;         // ceil(log2 |S|)
  Certainty certainty = Certainty::Exact;
  bool in_table = true;

  bool contains(const BitString& x) const;
};

// Every set containing x printed by some Halted row of t, plus {x} and
// {0,1}^|x| via print-literal programs when no row prints them.
// Sorted by (k, log_card, encoding).
std::vector<Model> models_of(const BitString& x, const HaltingTable& t);

// kModelTag, the model's program, then the rank of x in S on log_card bits.
// Throws NotMember.
BitString two_part(const Model& s, const BitString& x);
// Framework interpreter for two-part descriptions; nullopt when d is not one.
std::optional<BitString> run_two_part(const BitString& d, const BitString& z, std::uint64_t budget);

struct DescProfile {
  Profile lambda;                  // closure of (K(S), K(S) + log|S| + |tag|)
  std::vector<Certainty> flags;    // per generator of lambda
  ShortestProgram shortest;        // K(x | z)
  Profile delta;                   // lambda translated down by K(x | z)
  bool clipped = false;
};

DescProfile desc_profile(const BitString& x, const HaltingTable& t);

// Least K(S) among models within c of K(x | z). Throws NoSufficientModel.
Measured soph(const DescProfile& d, Coord c);
// min over c of soph_c + c.
Measured csoph(const DescProfile& d);

struct StructureRow {
  Coord i = 0;
  Coord lambda = 0;  // min K(S) + log|S| + |tag| over K(S) <= i
  Coord h = 0;       // min log|S|
  Coord beta = 0;    // min log|S| - K(x | S)
  Certainty certainty = Certainty::Exact;
};

// Rows for i from the cheapest model to the dearest. K(x | S) comes from a
// table conditioned on the encoding of S, long enough to hold x's literal.
std::vector<StructureRow> structure_functions(const BitString& x, TableStore& store);

struct ThetaProfiles {
  Profile tilde;                    // (theta^z(p), |p|): clock of the z-table's own sum
  std::vector<Certainty> tilde_flags;
  Profile hat;                      // (theta(p), |p|): clock of the unconditional sum
  std::vector<Certainty> hat_flags;
  ShortestProgram shortest;
};

ThetaProfiles theta_profiles(const BitString& y, const HaltingTable& t_z, const HaltingTable& t_eps);

// Rebuilds the theta profile of y given z from y's shortest program and its
// clock value alone, by dovetailing. Programs run given t_z.z(); the clock is
// t_clock's sum (t_z for tilde, the unconditional table for hat).
Profile reconstruct_theta(const BitString& y_star, std::uint64_t theta, const HaltingTable& t_z,
                          const HaltingTable& t_clock);

// Least i with (i, K(y | z)) in the tilde profile.
Measured soph_free(const ThetaProfiles& th);

// Number of eps in [0, min(K(x), |x|)] with (K(x) - eps, |x| - eps) outside lambda.
Measured antistochasticity(const BitString& x, const DescProfile& d);

}  // namespace aitbench
