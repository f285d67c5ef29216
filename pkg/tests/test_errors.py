import unittest
from hyperfib.errors import *

class TestHyperFibErrors(unittest.TestCase):
    """ Test cases for the hyperfib errors """

    def test_base_error(self):
        """ tests hyperfib base error """
        message = "oops"
        base_error = HyperFibBaseError(message=message)
        self.assertIsInstance(base_error, HyperFibBaseError)
        self.assertIsInstance(base_error, Exception)
        self.assertEqual(base_error.message, message)

    def test_arithmetic_error(self):
        """ tests hyperfib arithmetic error """
        message = "oops arithmetic"
        arithmetic_error = HyperFibArithmeticError(message=message)
        self.assertIsInstance(arithmetic_error, HyperFibArithmeticError)
        self.assertIsInstance(arithmetic_error, HyperFibBaseError)
        self.assertEqual(arithmetic_error.message, message)

    def test_validation_error(self):
        """ tests hyperfib validation error """
        message = "oops validation"
        validation_error = HyperFibValidationError(message=message)
        self.assertIsInstance(validation_error, HyperFibValidationError)
        self.assertIsInstance(validation_error, HyperFibBaseError)
        self.assertEqual(validation_error.message, message)

    def test_search_error(self):
        """ tests hyperfib search error """
        message = "oops search"
        search_error = HyperFibSearchError(message=message)
        self.assertIsInstance(search_error, HyperFibSearchError)
        self.assertIsInstance(search_error, HyperFibBaseError)
        self.assertEqual(search_error.message, message)

    def test_reference_error(self):
        """ tests hyperfib reference error """
        reference_error = ReferenceFixtureError()
        self.assertIsInstance(reference_error, HyperFibReferenceError)
        self.assertIsInstance(reference_error, HyperFibBaseError)
        self.assertEqual(reference_error.message, "Invalid reference fixture.")

    def test_leaf_errors(self):
        """ tests family of every leaf error and its default message """
        families = [
            (NonIntegralInvariantError, HyperFibArithmeticError),
            (InvariantMismatchError, HyperFibArithmeticError),
            (ParityMismatchError, HyperFibValidationError),
            (PreconditionViolatedError, HyperFibValidationError),
            (UnknownCaseError, HyperFibValidationError),
            (InvalidArgumentError, HyperFibValidationError),
            (OutOfRegimeError, HyperFibSearchError),
            (ReferenceFixtureError, HyperFibReferenceError),
        ]
        for leaf, family in families:
            error = leaf()
            self.assertIsInstance(error, family)
            self.assertTrue(error.message)
            self.assertEqual(str(error), error.message)

if __name__ == '__main__':
    unittest.main()
