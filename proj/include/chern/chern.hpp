#pragma once

// Umbrella header: exact Schubert-calculus integrals over Grassmannians.

#include "chern/bundle.hpp"
#include "chern/errors.hpp"
#include "chern/identities.hpp"
#include "chern/integrate.hpp"
#include "chern/localization.hpp"
#include "chern/monomial.hpp"
#include "chern/parser.hpp"
#include "chern/partition.hpp"
#include "chern/polynomial.hpp"
#include "chern/rational.hpp"
#include "chern/symmetric.hpp"
#include "chern/variable.hpp"
#include "chern/weights.hpp"
