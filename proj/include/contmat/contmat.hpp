#ifndef CONTMAT_CONTMAT_HPP
#define CONTMAT_CONTMAT_HPP

#include "contmat/conjugacy.hpp"
#include "contmat/contfrac.hpp"
#include "contmat/errors.hpp"
#include "contmat/io.hpp"
#include "contmat/mat2.hpp"
#include "contmat/oracle.hpp"
#include "contmat/presentation.hpp"

#endif
