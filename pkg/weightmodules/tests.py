from dataclasses import replace
import json
import os
import tempfile

from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APIClient, APISimpleTestCase
from sympy.polys.domains import QQ

from calculator.reports import build_from_specs
from kernel import linalg
from kernel.exceptions import (
    InfeasibleSystem, InvalidModule, MismatchedModules, ModuleSpecError, NotNilpotent, WindowTooSmall,
)
from kernel.weights import WeightClass

from .constructors import coset_split, direct_sum, make_Kx, make_M, random_scramble
from .decomposition import (
    DecompositionReport, decompose, is_isomorphic, is_uniserial, jordan_type, module_length,
    quotient_jordan_type, submodule_chain,
)
from .homological import ModuleSpec, ext_dim, hom_dim, parse_module_spec
from .morphisms import (
    hom_window, hom_window_basis, is_isomorphism, is_local_endomorphism_basis, shift_isomorphism,
)
from .schema import dump_module, load_module, module_from_dict, module_to_dict
from .submodules import Submodule, compute_FM, split_complement, weight_one_index
from .suites import indecomposability_suite, splitting_sweep
from .tasks import run_indecomposability_suite, run_splitting_sweep
from .window import Boundary, align

ZERO_CLASS = WeightClass(0)
HALF_CLASS = WeightClass(QQ(1, 2))


def spec(text):
    return parse_module_spec(text)


def built(text):
    return spec(text).build()


class ConstructorTests(SimpleTestCase):
    def test_M_dimensions(self):
        for n in range(1, 6):
            M = make_M(n, QQ(1, 3), -3, 3)
            self.assertEqual(M.dims(), [n] * 7)
            self.assertTrue(M.is_valid())
            self.assertEqual(M.max_block(), n)

    def test_M_needs_positive_length_and_a_real_window(self):
        with self.assertRaises(ModuleSpecError):
            make_M(0, 0, -3, 3)
        with self.assertRaises(ModuleSpecError):
            make_M(2, 0, 2, 2)

    def test_Kx_support_starts_at_weight_one(self):
        K = make_Kx(5, -2)
        self.assertEqual(K.dims(), [0, 0, 0, 1, 1, 1, 1, 1])
        self.assertEqual(K.support(), [QQ(k) for k in range(1, 6)])
        self.assertIs(K.lower, Boundary.GENUINE)
        self.assertTrue(K.is_valid())

    def test_Kx_cut_above_weight_one_is_truncated(self):
        K = make_Kx(8, 3)
        self.assertIs(K.lower, Boundary.TRUNCATED)
        self.assertTrue(K.is_valid())

    def test_direct_sum(self):
        M = direct_sum(make_Kx(4, -4), make_M(2, 0, -4, 4), make_M(1, 2, -6, 2))
        self.assertEqual(M.dims(), [3] * 5 + [4] * 4)
        self.assertIs(M.lower, Boundary.TRUNCATED)
        self.assertIsNone(M.D(-4))
        self.assertTrue(M.is_valid())

    def test_direct_sum_needs_one_class_and_one_window(self):
        with self.assertRaises(MismatchedModules):
            direct_sum(make_M(1, 0, -3, 3), make_M(1, QQ(1, 2), -3, 3))
        with self.assertRaises(MismatchedModules):
            direct_sum(make_M(1, 0, -3, 3), make_M(1, 0, -4, 3))

    def test_coset_split(self):
        A, B = built('M(1,0)'), built('M(2,1/2)')
        first, second = coset_split(B.weight_spaces() + A.weight_spaces())
        self.assertEqual((first.weight_class, first.lo, first.hi), (ZERO_CLASS, A.lo, A.hi))
        self.assertEqual((second.weight_class, second.lo, second.hi), (HALF_CLASS, B.lo, B.hi))
        self.assertEqual(second.dims(), B.dims())
        self.assertIs(first.lower, Boundary.TRUNCATED)
        self.assertTrue(first.is_valid() and second.is_valid())

    def test_coset_split_needs_consecutive_weights(self):
        spaces = built('M(1,0)').weight_spaces()
        with self.assertRaises(InvalidModule):
            coset_split(spaces[:3] + spaces[4:])

    def test_scramble_preserves_validity(self):
        M = random_scramble(direct_sum(make_Kx(5, -5), make_M(3, 0, -5, 5)), seed=3)
        self.assertTrue(M.is_valid())
        self.assertEqual(M.dims(), [3] * 6 + [4] * 5)


class WindowTests(SimpleTestCase):
    def test_broken_identity_is_reported(self):
        M = make_M(2, 0, -3, 3)
        spaces = list(M.spaces)
        spaces[3] = replace(spaces[3], U=linalg.scale(linalg.eye(2), 2))
        broken = replace(M, spaces=tuple(spaces))
        self.assertIn('index 0: D_1 U_0 is not the identity', broken.validate())
        with self.assertRaises(InvalidModule) as caught:
            broken.ensure_valid()
        self.assertTrue(caught.exception.violations)

    def test_non_nilpotent_N(self):
        M = make_M(1, 0, -2, 2)
        spaces = list(M.spaces)
        spaces[0] = replace(spaces[0], N=linalg.eye(1))
        self.assertIn('index -2: N is not nilpotent', replace(M, spaces=tuple(spaces)).validate())

    def test_shape_errors_come_first(self):
        M = make_M(2, 0, -2, 2)
        spaces = list(M.spaces)
        spaces[1] = replace(spaces[1], D=linalg.eye(3))
        violations = replace(M, spaces=tuple(spaces)).validate()
        self.assertEqual(violations, ['index -1: D has shape (3, 3), expected (2, 2)'])

    def test_rebase(self):
        M = make_M(1, QQ(1, 2), -3, 3).rebase(QQ(5, 2))
        self.assertEqual((M.lo, M.hi), (-5, 1))
        self.assertEqual(M.weight(M.lo), QQ(-5, 2))
        with self.assertRaises(MismatchedModules):
            M.rebase(QQ(1, 3))

    def test_restrict_truncates_new_edges(self):
        M = make_Kx(5, -5).restrict(-2, 2)
        self.assertIs(M.lower, Boundary.TRUNCATED)
        self.assertIs(M.upper, Boundary.TRUNCATED)
        self.assertIsNone(M.D(-2))
        self.assertIsNone(M.U(2))
        self.assertEqual(M.interior(), [-1, 0, 1])
        self.assertTrue(M.is_valid())

    def test_align_pads_genuine_edges(self):
        A, B = align(make_Kx(6, 1), make_M(1, 0, -4, 4))
        self.assertEqual((A.lo, A.hi, B.lo, B.hi), (-4, 4, -4, 4))
        self.assertEqual(A.dims(), [0] * 5 + [1] * 4)
        self.assertIs(A.lower, Boundary.GENUINE)
        self.assertTrue(A.is_valid())

    def test_truncated_edges_cannot_be_padded(self):
        with self.assertRaises(MismatchedModules):
            make_M(1, 0, -2, 2).extend_below(-4)
        A, B = align(make_M(1, 0, -2, 2), make_M(1, 0, -6, 6))
        self.assertEqual((A.lo, A.hi), (-2, 2))

    def test_width_requirement(self):
        with self.assertRaises(WindowTooSmall):
            make_M(2, 0, -2, 2).require_width()
        self.assertEqual(make_M(2, 0, -4, 4).require_width(), 7)


class SubmoduleTests(SimpleTestCase):
    def test_FM_of_Kx(self):
        K = make_Kx(5, -5)
        FM = compute_FM(K)
        self.assertEqual(FM.dims(), [0] * 6 + [1] * 5)
        self.assertTrue(FM.is_closed())

    def test_FM_at_a_genuine_edge(self):
        self.assertEqual(compute_FM(make_Kx(6, 1)).dims(), [1] * 6)

    def test_FM_vanishes_on_M(self):
        self.assertTrue(compute_FM(built('M(3,0)')).is_zero)
        self.assertTrue(compute_FM(built('M(2,1)')).is_zero)
        self.assertTrue(compute_FM(built('M(2,1/2)')).is_zero)

    def test_FM_needs_weight_one(self):
        with self.assertRaises(WindowTooSmall):
            compute_FM(make_M(1, 0, 3, 8))
        with self.assertRaises(WindowTooSmall):
            compute_FM(make_Kx(8, 3))

    def test_submodule_algebra(self):
        M = built('M(2,0)')
        kernel = Submodule.from_spans(M, {i: linalg.nullspace(M.N(i)) for i in M.indices})
        self.assertTrue(kernel.is_closed())
        self.assertTrue(Submodule.whole(M).contains(kernel))
        self.assertFalse(kernel.contains(Submodule.whole(M)))
        self.assertTrue(kernel.meets_trivially(Submodule.zero(M)))
        self.assertEqual(kernel.to_module().dims(), [1] * len(M.dims()))
        self.assertTrue(kernel.to_module().is_valid())

    def test_split_Kx_plus_M(self):
        M = random_scramble(build_from_specs('Kx+M(2,0)'), seed=5)
        C, report = split_complement(M)
        self.assertEqual(report.multiplicity, 1)
        self.assertEqual(list(report.fm_dims), [0] * 8 + [1] * 7)
        self.assertEqual(list(report.complement_dims), [2] * 15)
        self.assertTrue(C.is_closed())
        self.assertTrue(C.to_module().is_valid())

    def test_complement_is_forced_by_the_integral(self):
        M = random_scramble(build_from_specs('Kx+Kx+M(1,0)'), seed=8)
        C, report = split_complement(M)
        self.assertEqual(report.multiplicity, 2)
        i1 = weight_one_index(M)
        for i in M.indices:
            if i < i1:
                self.assertEqual(C.dim(i), M.dim(i))
            elif i > M.lo:
                pushed = linalg.mul(M.U(i - 1), C.basis(i - 1))
                self.assertEqual(linalg.rank(pushed), C.dim(i))
                self.assertEqual(linalg.rank(linalg.hstack(pushed, C.basis(i))), C.dim(i))

    def test_split_of_Kx_leaves_nothing(self):
        C, report = split_complement(make_Kx(5, -5))
        self.assertTrue(C.is_zero)
        self.assertEqual(report.multiplicity, 1)

    def test_split_refuses_invalid_data(self):
        M = make_M(1, 0, -5, 5)
        spaces = list(M.spaces)
        spaces[5] = replace(spaces[5], U=linalg.scale(linalg.eye(1), 3))
        with self.assertRaises(InfeasibleSystem):
            split_complement(replace(M, spaces=tuple(spaces)))

    def test_splitting_sweep(self):
        outcome = splitting_sweep(seed=0, trials=200)
        self.assertTrue(outcome['passed'], outcome['failures'])


class JordanTypeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(jordan_type(linalg.jordan_block(3)), (3,))
        J = linalg.block_diag(linalg.jordan_block(2), linalg.jordan_block(1), linalg.jordan_block(2))
        self.assertEqual(jordan_type(J), (2, 2, 1))
        self.assertEqual(jordan_type(linalg.zeros(3, 3)), (1, 1, 1))
        self.assertEqual(jordan_type(linalg.zeros(0, 0)), ())

    def test_not_nilpotent(self):
        with self.assertRaises(NotNilpotent):
            jordan_type(linalg.eye(2))
        with self.assertRaises(NotNilpotent):
            jordan_type(linalg.zeros(2, 3))

    def test_quotient(self):
        socle = linalg.matrix([[0], [0], [1]])
        self.assertEqual(quotient_jordan_type(linalg.jordan_block(3), socle), (2,))


class DecompositionTests(SimpleTestCase):
    def test_single_factors(self):
        self.assertEqual(decompose(built('M(2,7/2)')).to_dict(), {'s': 0, 'factors': [{'n': 2, 'class': '1/2'}]})
        self.assertEqual(decompose(built('Kx')), DecompositionReport(1))

    def test_mixed_sum(self):
        M = random_scramble(build_from_specs('M(1,0)+Kx+M(3,1)+Kx'), seed=2)
        report = decompose(M)
        self.assertEqual(report, DecompositionReport(2, ((3, ZERO_CLASS), (1, ZERO_CLASS))))
        self.assertEqual(report.length, 6)
        self.assertEqual(report.summands, 4)
        self.assertEqual(module_length(M), 6)

    def test_sums_merge_reports(self):
        pairs = [
            ('Kx', 'M(2,0)'),
            ('M(1,0)', 'M(3,1)'),
            ('Kx+M(2,0)', 'Kx'),
            ('M(2,0)', 'M(2,-1)'),
            ('M(1,1/2)', 'M(2,5/2)'),
        ]
        for seed, (left, right) in enumerate(pairs):
            with self.subTest(left=left, right=right):
                A = random_scramble(build_from_specs(left, -11, 11), seed=seed)
                B = random_scramble(build_from_specs(right, -11, 11), seed=seed + 10)
                self.assertEqual(decompose(direct_sum(A, B)), decompose(A).merge(decompose(B)))

    def test_narrow_window_is_refused(self):
        with self.assertRaises(WindowTooSmall):
            decompose(spec('M(2,0)').build(-1, 1))

    def test_isomorphism(self):
        self.assertTrue(is_isomorphic(built('M(2,7/2)'), built('M(2,1/2)')))
        self.assertTrue(is_isomorphic(random_scramble(built('M(3,0)'), seed=1), built('M(3,0)')))
        self.assertFalse(is_isomorphic(built('M(2,0)'), built('M(2,1/2)')))
        self.assertFalse(is_isomorphic(built('M(2,0)'), build_from_specs('M(1,0)+M(1,0)')))

    def test_indecomposables(self):
        outcome = indecomposability_suite(max_n=5)
        self.assertTrue(outcome['passed'], outcome['failures'])
        self.assertEqual(outcome['checked'], 15)


class UniserialTests(SimpleTestCase):
    def test_chain_of_M(self):
        for n in range(1, 5):
            M = random_scramble(built(f'M({n},0)'), seed=n)
            chain = submodule_chain(M)
            self.assertEqual(len(chain), n + 1)
            self.assertEqual([sub.dims()[0] for sub in chain], list(range(n + 1)))

    def test_Kx_is_simple(self):
        chain = submodule_chain(built('Kx'))
        self.assertEqual(len(chain), 2)

    def test_sums_are_not_uniserial(self):
        self.assertFalse(is_uniserial(build_from_specs('M(1,0)+M(1,0)')))
        self.assertFalse(is_uniserial(build_from_specs('Kx+M(1,0)')))


class HomTests(SimpleTestCase):
    def test_closed_formula(self):
        self.assertEqual(hom_dim('Kx', 'Kx'), 1)
        self.assertEqual(hom_dim('Kx', 'M(2,0)'), 0)
        self.assertEqual(hom_dim('M(2,0)', 'Kx'), 0)
        self.assertEqual(hom_dim('M(2,0)', 'M(3,5)'), 2)
        self.assertEqual(hom_dim('M(2,0)', 'M(3,1/2)'), 0)

    def test_window_agrees_with_formula(self):
        specs = ['Kx'] + [f'M({n},{w})' for n in range(1, 5) for w in ('0', '1', '1/2')]
        for source in specs:
            for target in specs:
                with self.subTest(source=source, target=target):
                    self.assertEqual(hom_window(built(source), built(target)), hom_dim(source, target))

    def test_window_on_scrambled_sums(self):
        A = random_scramble(build_from_specs('Kx+M(2,0)'), seed=8)
        B = random_scramble(build_from_specs('M(3,0)+M(1,0)'), seed=9)
        self.assertEqual(hom_window(A, B), 3)
        self.assertEqual(hom_window(B, A), 3)

    def test_basis_is_made_of_morphisms(self):
        basis = hom_window_basis(built('M(2,0)'), built('M(3,0)'))
        self.assertEqual(len(basis), 2)
        self.assertTrue(all(not phi.is_zero for phi in basis))

    def test_endomorphisms_are_local(self):
        for n in range(1, 6):
            M = built(f'M({n},0)')
            basis = hom_window_basis(M, M)
            self.assertEqual(len(basis), n)
            self.assertTrue(is_local_endomorphism_basis(basis))
        self.assertTrue(is_local_endomorphism_basis(hom_window_basis(built('Kx'), built('Kx'))))

    def test_sum_is_not_local(self):
        M = build_from_specs('M(1,0)+M(1,0)')
        self.assertFalse(is_local_endomorphism_basis(hom_window_basis(M, M)))


class ShiftTests(SimpleTestCase):
    def test_shift_isomorphisms(self):
        for n in range(1, 4):
            for k in range(-3, 4):
                for lam in (QQ(0), QQ(1, 2)):
                    phi = shift_isomorphism(n, lam, k)
                    self.assertTrue(is_isomorphism(phi))
                    self.assertEqual(decompose(phi.source), decompose(phi.target))

    def test_opposite_shifts_compose_to_the_identity(self):
        for n in range(1, 4):
            lo, hi = -(2 * n + 3), 2 * n + 3
            for k in (-2, 1, 3):
                phi = shift_isomorphism(n, QQ(1, 2), k)
                back = shift_isomorphism(n, QQ(1, 2) + k, -k, lo - k, hi - k)
                identity = back.compose(phi)
                self.assertIs(identity.source, phi.source)
                self.assertEqual(len(identity.maps), hi - lo + 1)
                for f in identity.maps:
                    self.assertTrue(linalg.equal(f, linalg.eye(n)))


class ExtTests(SimpleTestCase):
    def test_computed_and_stated(self):
        report = ext_dim('M(2,0)', 'M(3,0)')
        self.assertEqual(report.to_dict(), {
            'computed': 2, 'paper_claim': 1, 'agrees': False, 'reason': 'weight-space-cokernel',
        })

    def test_computed_is_the_smaller_length(self):
        for n in range(1, 5):
            for m in range(1, 5):
                for source, target in ((f'M({n},0)', f'M({m},0)'), (f'M({n},1/2)', f'M({m},7/2)')):
                    report = ext_dim(source, target)
                    self.assertEqual(report.computed, min(n, m))
                    self.assertEqual(report.claimed, 1)

    def test_Kx_is_projective(self):
        self.assertEqual(ext_dim('Kx', 'M(2,0)').to_dict()['reason'], 'kx-projective')
        self.assertEqual(ext_dim('Kx', 'Kx').computed, 0)

    def test_other_vanishing_cases(self):
        report = ext_dim('M(1,0)', 'Kx')
        self.assertEqual((report.computed, report.claimed), (0, 0))
        report = ext_dim('M(2,1/2)', 'M(2,0)')
        self.assertEqual((report.computed, report.reason), (0, 'disjoint-classes'))
        self.assertTrue(report.agrees)


class ModuleSpecTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(spec('Kx'), ModuleSpec())
        self.assertEqual(spec('K[x]'), ModuleSpec())
        self.assertEqual(spec(' M( 3 , -1/2 ) '), ModuleSpec(3, QQ(-1, 2)))
        self.assertEqual(str(spec('M(3,-1/2)')), 'M(3,-1/2)')

    def test_rejects(self):
        for text in ('M(0,1)', 'M(2)', 'N(1,0)', 'M(1,1/0)', ''):
            with self.subTest(text=text):
                with self.assertRaises(ModuleSpecError):
                    spec(text)

    def test_window_offsets_are_relative_to_the_class(self):
        M = spec('M(1,7/2)').build(-2, 2)
        self.assertEqual((M.weight(M.lo), M.weight(M.hi)), (QQ(-3, 2), QQ(5, 2)))


class SchemaTests(SimpleTestCase):
    def test_round_trip(self):
        for text in ('Kx+M(2,0)', 'M(3,1/2)'):
            M = random_scramble(build_from_specs(text), seed=4)
            self.assertEqual(dump_module(module_from_dict(module_to_dict(M))), dump_module(M))

    def test_load_from_file(self):
        M = built('Kx')
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'kx.json')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(dump_module(M))
            self.assertEqual(decompose(load_module(path)), DecompositionReport(1))

    def test_rejected_documents(self):
        document = module_to_dict(make_M(1, 0, -2, 2))
        broken = json.loads(json.dumps(document))
        broken['spaces'][0]['N'] = [['1.5']]
        with self.assertRaises(ModuleSpecError):
            module_from_dict(broken)
        missing = {key: value for key, value in document.items() if key != 'spaces'}
        with self.assertRaises(ModuleSpecError):
            module_from_dict(missing)
        short = dict(document, spaces=document['spaces'][:2])
        with self.assertRaises(ModuleSpecError):
            module_from_dict(short)
        with self.assertRaises(ModuleSpecError):
            load_module('/nonexistent/module.json')


class TaskTests(SimpleTestCase):
    def test_sweep_task(self):
        outcome = run_splitting_sweep.apply(kwargs={'seed': 1, 'trials': 10}).get()
        self.assertTrue(outcome['passed'])
        self.assertEqual(outcome['checked'], 10)

    def test_indecomposability_task(self):
        self.assertTrue(run_indecomposability_suite.apply(kwargs={'max_n': 2}).get()['passed'])


class ModuleAPITests(APISimpleTestCase):
    def setUp(self):
        self.client = APIClient()

    def post(self, name, payload):
        return self.client.post(f'/api/v1/modules/{name}/', payload, format='json')

    def test_decompose(self):
        response = self.post('decompose', {'module': 'Kx+M(2,0)'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json(), {'s': 1, 'factors': [{'n': 2, 'class': '0'}], 'length': 3})

    def test_decompose_document(self):
        document = module_to_dict(random_scramble(built('M(2,1/2)'), seed=6))
        response = self.post('decompose', {'module': document})
        self.assertEqual(response.json()['factors'], [{'n': 2, 'class': '1/2'}])

    def test_make(self):
        response = self.post('make', {'module': 'M(1,0)', 'scramble_seed': 3})
        self.assertTrue(response.json()['valid'])

    def test_hom_and_ext(self):
        payload = {'source': 'M(2,0)', 'target': 'M(3,0)'}
        self.assertEqual(self.post('hom', payload).json(), {'dim': 2, 'window_dim': 2})
        self.assertEqual(self.post('ext', payload).json(), {
            'computed': 2, 'paper_claim': 1, 'agrees': False, 'reason': 'weight-space-cokernel',
        })

    def test_uniserial(self):
        response = self.post('uniserial', {'module': 'M(2,0)'})
        self.assertEqual(response.json()['chain_length'], 3)

    def test_bad_spec(self):
        response = self.post('decompose', {'module': 'M(0,1)'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_ext_needs_classified_modules(self):
        payload = {'source': 'Kx+M(1,0)', 'target': 'M(1,0)'}
        self.assertEqual(self.post('ext', payload).status_code, status.HTTP_400_BAD_REQUEST)

    def test_narrow_window_is_unprocessable(self):
        response = self.post('decompose', {'module': 'M(2,0)', 'lo': -1, 'hi': 1})
        self.assertEqual(response.status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)
        self.assertEqual(response.json()['error_code'], 'window-too-small')
