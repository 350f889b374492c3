#pragma once

/**
 * @file affcrys.hpp
 * @brief Umbrella header: crystal graphs of affine type A from Laurent
 *        monomials and exponent tuples, with a generic closure engine,
 *        isomorphism and axiom checking, and the verifier battery.
 */

#include "affcrys/checks.hpp"
#include "affcrys/classical.hpp"
#include "affcrys/coherent.hpp"
#include "affcrys/dagger.hpp"
#include "affcrys/errors.hpp"
#include "affcrys/graph.hpp"
#include "affcrys/iso.hpp"
#include "affcrys/kyoto.hpp"
#include "affcrys/maps.hpp"
#include "affcrys/models.hpp"
#include "affcrys/monomial.hpp"
#include "affcrys/params.hpp"
#include "affcrys/quotient.hpp"
#include "affcrys/string_ops.hpp"
#include "affcrys/tuples.hpp"
#include "affcrys/variables.hpp"
#include "affcrys/weight.hpp"
#include "affcrys/xfactor.hpp"
