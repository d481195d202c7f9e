/**
 * @file agcodes.hpp
 * @brief Everything in one include.
 */
#pragma once

#include "agcodes/errors.hpp"
#include "agcodes/rng.hpp"
#include "agcodes/field.hpp"
#include "agcodes/polynomial.hpp"
#include "agcodes/matrix.hpp"
#include "agcodes/linear_code.hpp"
#include "agcodes/divisor.hpp"
#include "agcodes/curve.hpp"
#include "agcodes/ag_code.hpp"
#include "agcodes/bounds.hpp"
#include "agcodes/decoding.hpp"
#include "agcodes/lrc.hpp"
#include "agcodes/mceliece.hpp"
#include "agcodes/multiplication.hpp"
#include "agcodes/secret_sharing.hpp"
#include "agcodes/rr_conditions.hpp"
#include "agcodes/serialization.hpp"
