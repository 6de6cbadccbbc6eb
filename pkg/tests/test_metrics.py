from wkpc_simulator import Verdict
from wkpc_simulator import search_and_return_metrics


METRIC_KEYS = {'depth', 'frontier', 'explored', 'visited', 'pruned', 'committed', 'time'}


def test_search_and_return_metrics(corrected_system):

    result, metrics = search_and_return_metrics(corrected_system, "aaaa")

    assert result.verdict is Verdict.ACCEPT
    assert metrics

    assert all(set(layer_metrics) == METRIC_KEYS for layer_metrics in metrics)
    assert [layer_metrics['depth'] for layer_metrics in metrics] == list(range(len(metrics)))


def test_metrics_are_monotone(corrected_system):

    _, metrics = search_and_return_metrics(corrected_system, "a" * 9)

    explored = [layer_metrics['explored'] for layer_metrics in metrics]
    visited = [layer_metrics['visited'] for layer_metrics in metrics]

    assert explored == sorted(explored)
    assert visited == sorted(visited)
    assert all(layer_metrics['committed'] <= 9 for layer_metrics in metrics)


def test_composite_callback(corrected_system):

    callback_check = {'ok': False}

    def custom_callback(**parameters):

        callback_check['ok'] = True

    result, metrics = search_and_return_metrics(corrected_system, "aaaa",
                                                callback=custom_callback)

    assert callback_check['ok'] is True
    assert metrics is not None
