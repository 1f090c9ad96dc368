#pragma once

#include "gprs/errors.hpp"
#include "gprs/number_theory.hpp"
#include "gprs/galois.hpp"
#include "gprs/polynomial.hpp"
#include "gprs/matrix.hpp"
#include "gprs/codes.hpp"
#include "gprs/deepholes.hpp"
#include "gprs/verify.hpp"
