"""
End-to-end checks for the iterpow library and command line.
Each check prints its progress and returns True or False. Run this file directly
for a summary; pytest runs the whole set through test_all_checks.
"""
import json
import os
import random
import sys
from contextlib import redirect_stdout
from io import StringIO

from config import settings


def _spec(name):
    return os.path.join(settings.SPECS_DIR, name)


def check_imports():
    """Test if all modules can be imported correctly."""
    print("🧪 Testing imports...")

    try:
        from src.coeff import FieldSpec
        from src.ring import RingSpec, validate_spec
        from src.gb import twosided_gb, truncated_basis
        from src.ideal import IdealHandle, powint, iterate_powint, cert_zero_principal
        from src.invariant import invariant_factorization
        from src.lie import LieAlgebraSpec, to_ring_spec
        from src.cli import run_command, verify_theorem
        print("✅ Library and command line modules imported successfully")
        return True

    except ImportError as e:
        print(f"❌ Import error: {e}")
        return False


def check_ring_axioms():
    """Associativity and distributivity on random products in the solvable ring."""
    print("\n🧪 Testing ring axioms...")

    from src.coeff import FieldSpec
    from src.ring import RingSpec

    spec = RingSpec(FieldSpec.rationals(), ["x1", "x2"], {(2, 1): {(1, 0): 1}})
    rng = random.Random(7)

    def sample():
        f = spec.zero()
        for _ in range(3):
            f = f + spec.monomial([rng.randint(0, 2), rng.randint(0, 2)], rng.randint(-2, 2))
        return f

    for _ in range(50):
        a, b, c = sample(), sample(), sample()
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            print(f"❌ Axiom failure on {a}, {b}, {c}")
            return False
    x1, x2 = spec.var(1), spec.var(2)
    if x2 * x1 - x1 * x2 != x1:
        print("❌ Commutation rule x2*x1 = x1*x2 + x1 not honoured")
        return False
    print("✅ Ring axioms hold on 50 random triples")
    return True


def check_solvable_verify():
    """The maximal ideal of the 2-dim solvable ring vanishes after two rounds."""
    print("\n🧪 Testing verify on the solvable ring...")

    from src.cli import CONSISTENT, load_spec, parse_generators, verify_theorem

    for name in ("solvable2.ring", "solvable2_f5.ring"):
        spec, lie = load_spec(_spec(name))
        report = verify_theorem(spec, parse_generators("x1, x2", spec), 6, 10, 3, lie=lie)
        if report.verdict != CONSISTENT or report.m_obs != 2:
            print(f"❌ {name}: verdict {report.verdict}, m_obs {report.m_obs}")
            return False
        print(f"✅ {name}: m_obs {report.m_obs} within bound {report.bound}")
    return True


def check_heisenberg():
    """Powers of the augmentation ideal over F7 die out in the first round."""
    print("\n🧪 Testing the Heisenberg ring...")

    from src.cli import load_spec, parse_generators
    from src.gb import quotient_dim
    from src.ideal import IdealHandle, powint

    spec, _ = load_spec(_spec("heisenberg_f7.lie"))
    I = IdealHandle(spec, parse_generators("x1, x2, x3", spec))
    if quotient_dim(I.gb) != 1:
        print(f"❌ Quotient dimension {quotient_dim(I.gb)}, expected 1")
        return False
    report = powint(I, 2, 5)
    if not report.status.is_zero:
        print(f"❌ Truncations {report.dims} did not reach zero")
        return False
    print(f"✅ Truncated dimensions {report.dims}")
    return True


def check_certificates():
    """Principal ideals with a normal generator are certified, others are not."""
    print("\n🧪 Testing zero certificates...")

    from src.coeff import FieldSpec
    from src.ideal import CertFailure, IdealHandle, ZeroCertificate, cert_zero_principal
    from src.ring import RingSpec

    spec = RingSpec(FieldSpec.rationals(), ["x1", "x2"], {(2, 1): {(1, 0): 1}})
    x1, x2 = spec.var(1), spec.var(2)
    if not isinstance(cert_zero_principal(IdealHandle(spec, [x1])), ZeroCertificate):
        print("❌ (x1) should be certified")
        return False
    if cert_zero_principal(IdealHandle(spec, [x1, x2])) is not CertFailure.NOT_PRINCIPAL:
        print("❌ (x1, x2) should not be principal")
        return False
    print("✅ Certificates behave as expected")
    return True


def check_factorization():
    """Invariant factorization of x^2(x - 1) under δ(x) = x^2 - x."""
    print("\n🧪 Testing invariant factorization...")

    from src.coeff import FieldSpec
    from src.invariant import UniPoly, UnivariateDerivation, factor_berlekamp, invariant_factorization

    x = UniPoly.x(FieldSpec.rationals())
    report = invariant_factorization(x ** 2 * (x - 1), [UnivariateDerivation(x ** 2 - x)])
    if dict(report.pairs()) != {x: 2, x - 1: 1}:
        print(f"❌ Unexpected factors {report.pairs()}")
        return False
    y = UniPoly.x(FieldSpec.prime(5))
    if factor_berlekamp(y ** 4 + 1, 5) != [y ** 2 + 2, y ** 2 + 3]:
        print("❌ Berlekamp split of x^4 + 1 over F5 is wrong")
        return False
    print("✅ Factorization results match")
    return True


def check_validation():
    """The broken table is rejected with the (3, 2, 1) Leibniz violation."""
    print("\n🧪 Testing spec validation...")

    from src.cli import load_spec
    from src.ring import validate_spec

    spec, _ = load_spec(_spec("bad.ring"))
    report = validate_spec(spec)
    if report.ok or report.violations[0].where != (3, 2, 1):
        print(f"❌ Unexpected validation result {report}")
        return False
    print("✅ Invalid table rejected")
    return True


def check_lie_pipeline():
    """Lie documents compile to valid enveloping rings and report their series."""
    print("\n🧪 Testing the Lie pipeline...")

    from src.cli import load_spec
    from src.lie import derived_series
    from src.ring import validate_spec

    spec, lie = load_spec(_spec("heisenberg_f7.lie"))
    if not validate_spec(spec).ok or derived_series(lie) != [3, 1, 0]:
        print("❌ Heisenberg algebra did not compile cleanly")
        return False
    print("✅ Lie algebra compiled to a valid ring")
    return True


def check_determinism():
    """Verify output does not depend on the order the generators are given in."""
    print("\n🧪 Testing report determinism...")

    from src.cli import run_command

    outputs = []
    for ideal in ("x1, x2", "x2, x1"):
        buffer = StringIO()
        with redirect_stdout(buffer):
            code = run_command([
                "--format", "json", "verify", "--spec", _spec("solvable2.ring"),
                "--ideal", ideal, "--deg", "4", "--maxpow", "6", "--iters", "2",
            ])
        if code != 0:
            print(f"❌ verify exited with {code}")
            return False
        outputs.append(json.loads(buffer.getvalue()))
    if outputs[0] != outputs[1]:
        print("❌ Reports differ between generator orders")
        return False
    print("✅ Reports identical across generator orders")
    return True


def run_all_tests():
    """Run all tests and provide a summary."""
    print("🚀 Starting iterpow System Tests\n")

    tests = [
        ("Import Tests", check_imports),
        ("Ring Axioms", check_ring_axioms),
        ("Solvable Verify", check_solvable_verify),
        ("Heisenberg", check_heisenberg),
        ("Certificates", check_certificates),
        ("Factorization", check_factorization),
        ("Validation", check_validation),
        ("Lie Pipeline", check_lie_pipeline),
        ("Determinism", check_determinism),
    ]

    results = []
    for test_name, check_func in tests:
        try:
            result = check_func()
            results.append((test_name, result))
        except Exception as e:
            print(f"❌ {test_name} failed with exception: {e}")
            results.append((test_name, False))

    print("\n" + "="*50)
    print("TEST SUMMARY")
    print("="*50)

    passed = sum(1 for _, result in results if result)
    total = len(results)

    for test_name, result in results:
        status = "✅ PASSED" if result else "❌ FAILED"
        print(f"{test_name:<25} {status}")

    print(f"\nTotal: {passed}/{total} tests passed")

    if passed == total:
        print("🎉 All tests passed!")
    else:
        print("⚠️  Some tests failed. Please check the errors above.")

    return passed == total


def test_all_checks():
    assert run_all_tests()


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
