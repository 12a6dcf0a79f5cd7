"""Cybersecurity environment dynamics."""
from __future__ import annotations

from ..core.actions import NOOP, Action, JointAction
from ..core.environment import Environment, Event
from ..core.rng import RngStream
from .structures import (
    ATTACKER,
    DEFENDER,
    NODE_VALUES,
    CyberAgent,
    CyberConfig,
    CyberObservation,
    CyberState,
    PowerGlimpse,
    SubnetNode,
)

ATTACKER_EXPLOIT_PROB = 0.8


def attacker_actions(state: CyberState, rng: RngStream) -> dict[str, Action]:
    """Scripted attacker mixture: exploit the current node with probability
    0.8, otherwise move to a uniformly random out-neighbour (exploiting
    instead when the node has none).  Absent attackers do nothing."""
    chosen: dict[str, Action] = {}
    for agent in state.agents:
        if agent.side != ATTACKER or not agent.present:
            continue
        if rng.random() < ATTACKER_EXPLOIT_PROB:
            chosen[agent.agent] = Action("exploit", agent.location)
        else:
            neighbors = state.config.out_neighbors(agent.location)
            if neighbors:
                chosen[agent.agent] = Action("move", neighbors[rng.randrange(len(neighbors))])
            else:
                chosen[agent.agent] = Action("exploit", agent.location)
    return chosen


class CybersecurityEnv(Environment):
    domain = "cybersecurity"

    def reset(self, config: CyberConfig, seed: int) -> tuple[CyberState, dict[str, CyberObservation]]:
        config.validate()
        nodes = tuple(
            SubnetNode(i, s, config.out_degree(i)) for i, s in enumerate(config.resolved_initial_states())
        )
        agents = tuple(
            CyberAgent(f"defender_{i}", DEFENDER, spec.location, spec.power)
            for i, spec in enumerate(config.defenders)
        ) + tuple(
            CyberAgent(f"attacker_{i}", ATTACKER, spec.location, spec.power)
            for i, spec in enumerate(config.attackers)
        )
        state = CyberState(t=0, seed=seed, config=config, nodes=nodes, agents=agents)
        return state, self.observe(state, {})

    def roster(self, state: CyberState) -> tuple[str, ...]:
        return tuple(a.agent for a in state.agents if a.side == DEFENDER)

    def present_agents(self, state: CyberState) -> tuple[str, ...]:
        return tuple(a.agent for a in state.agents if a.side == DEFENDER and a.present)

    def legal_actions(self, state: CyberState, agent: str) -> tuple[Action, ...]:
        me = self._agent(state, agent)
        if not me.present:
            return (NOOP,)
        moves = tuple(Action("move", node.id) for node in state.nodes if node.id != me.location)
        return (NOOP, Action("patch"), Action("monitor")) + moves

    def transition(self, state: CyberState, actions: JointAction, rng: RngStream) -> tuple[CyberState, list[Event]]:
        config = state.config
        events: list[Event] = []

        # Phase 1: presence dynamics.  One draw per roster agent per step from
        # a step-keyed substream, so the flip sequence depends only on
        # (seed, step, agent index), never on anyone's actions.
        presence_rng = rng.substream("presence", state.t)
        agents: list[CyberAgent] = []
        for agent in state.agents:
            u = presence_rng.random()
            if agent.present and u < config.p_leave:
                agents.append(CyberAgent(agent.agent, agent.side, agent.location, agent.power, False))
                events.append({"kind": "presence", "agent": agent.agent, "present": False})
            elif not agent.present and u < config.p_return:
                agents.append(CyberAgent(agent.agent, agent.side, agent.location, agent.power, True))
                events.append({"kind": "presence", "agent": agent.agent, "present": True})
            else:
                agents.append(agent)

        # Phase 2: scripted attacker actions, drawn for attackers present
        # after the presence phase.
        interim = CyberState(state.t, state.seed, config, state.nodes, tuple(agents))
        hostile = attacker_actions(interim, rng.substream("attacker", state.t))

        # Phase 3: moves are instantaneous relocations.  Actions of agents
        # that lost their connection in phase 1 are void.
        index = {a.agent: i for i, a in enumerate(agents)}
        for name, action in list(actions.items()) + list(hostile.items()):
            agent = agents[index[name]]
            if action.kind == "move" and agent.present:
                agents[index[name]] = CyberAgent(name, agent.side, action.target, agent.power, True)
                events.append(
                    {"kind": "moved", "agent": name, "from": agent.location, "to": action.target}
                )

        # Phase 4: per-node resolution of exploit power vs patch power.  The
        # node state shifts one level toward the stronger side; ties freeze.
        exploit_power = [0.0] * config.nodes
        patch_power = [0.0] * config.nodes
        for name, action in hostile.items():
            agent = agents[index[name]]
            if action.kind == "exploit" and agent.present:
                exploit_power[agent.location] += agent.power
                events.append({"kind": "exploited", "agent": name, "node": agent.location})
        for name, action in actions.items():
            agent = agents[index[name]]
            if action.kind == "patch" and agent.present:
                patch_power[agent.location] += agent.power
                events.append({"kind": "patched", "agent": name, "node": agent.location})

        nodes: list[SubnetNode] = []
        for node in state.nodes:
            net = (exploit_power[node.id] - patch_power[node.id]) / config.power_unit
            shift = (net > 0) - (net < 0)
            new_state = min(4, max(0, node.state_index + shift))
            nodes.append(SubnetNode(node.id, new_state, node.outgoing))
            if new_state != node.state_index:
                events.append(
                    {"kind": "node-state-change", "node": node.id, "from": node.state_index, "to": new_state}
                )

        next_state = CyberState(
            t=state.t + 1, seed=state.seed, config=config, nodes=tuple(nodes), agents=tuple(agents)
        )
        return next_state, events

    def reward(self, next_state: CyberState, events: list[Event]) -> dict[str, float]:
        """Team scalar paid every step: sum over nodes of the per-state value
        scaled by 2^outgoing.  All defenders receive it, present or not."""
        team = network_value(tuple(n.state_index for n in next_state.nodes), tuple(n.outgoing for n in next_state.nodes))
        return {a.agent: team for a in next_state.agents if a.side == DEFENDER}

    def observe(self, state: CyberState, actions: JointAction) -> dict[str, CyberObservation]:
        observations = {}
        node_states = tuple(n.state_index for n in state.nodes)
        for agent in state.agents:
            if agent.side != DEFENDER:
                continue
            if not agent.present:
                observations[agent.agent] = CyberObservation(
                    agent.agent, absent=True, me=None, num_nodes=state.config.nodes, legal_actions=(NOOP,)
                )
                continue
            others = tuple(
                PowerGlimpse(other.agent, other.side, other.power)
                for other in state.agents
                if other.agent != agent.agent
            )
            monitored = actions.get(agent.agent, NOOP).kind == "monitor"
            observations[agent.agent] = CyberObservation(
                agent=agent.agent,
                absent=False,
                me=agent,
                others=others,
                node_states=node_states if monitored else None,
                num_nodes=state.config.nodes,
                legal_actions=self.legal_actions(state, agent.agent),
            )
        return observations

    def is_terminal(self, state: CyberState) -> bool:
        return False  # runs to the configured horizon

    def _agent(self, state: CyberState, agent: str) -> CyberAgent:
        for a in state.agents:
            if a.agent == agent:
                return a
        raise KeyError(f"unknown agent {agent!r}")


def network_value(states: tuple[int, ...], outgoing: tuple[int, ...]) -> float:
    return sum(NODE_VALUES[s] * 2.0**o for s, o in zip(states, outgoing))
